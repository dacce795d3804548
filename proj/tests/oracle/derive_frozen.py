# Copyright 2026 The cdtising Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Independent reference values for the frozen constants in tests/unit/frozen_values.hpp.

Everything here is rebuilt from the model definitions with mpmath (50 digits)
or numpy, sharing no code with the C++ library. Run once; paste the output.
"""

import itertools
import math

import mpmath as mp
import numpy as np

mp.mp.dps = 50


def lam(g):
    g = mp.mpf(g)
    return ((1 - mp.sqrt(1 - 4 * g * g)) / (2 * g)) ** 2


def u(n, n2, g):
    return mp.binomial(n + n2 - 1, n - 1) * mp.mpf(g) ** (n + n2)


def pure_eigs(g):
    L = lam(g)
    r = mp.sqrt(L)
    # check phi(n) = n r^n is an eigenvector, n = 1..3
    for n in (1, 2, 3):
        lhs = mp.nsum(lambda k: u(n, int(k), g) * k * r ** k, [1, mp.inf])
        assert abs(lhs - L * n * r ** n) < mp.mpf(10) ** -40
    return L, r


def mat_T(beta, mu):
    return mp.matrix([[mp.e ** (beta - mu), mp.e ** (-beta - mu)],
                      [mp.e ** (-beta - mu), mp.e ** (beta - mu)]])


def q_family(beta, mu):
    T = mat_T(beta, mu)
    I2 = mp.eye(2)
    M = T * mp.inverse(I2 - T)
    M2 = M * M
    spins = [(1, 1), (1, -1), (-1, 1), (-1, -1)]
    idx = {1: 0, -1: 1}

    def chain(A, B):
        Q = mp.matrix(4, 4)
        for i, (a1, b1) in enumerate(spins):
            for j, (a2, b2) in enumerate(spins):
                Q[i, j] = mp.e ** (beta * (a1 * b1 + a2 * b2)) * A[idx[a1], idx[a2]] * B[idx[b1], idx[b2]]
        return Q

    return chain(M, M), chain(M, M2), chain(T, M), chain(T, M2)


def rho(Q):
    ev = mp.eig(Q, left=False, right=False)
    return max(abs(x) for x in ev)


def mu_star(beta):
    beta = mp.mpf(beta)
    lo = mp.log(2 * mp.cosh(beta)) + mp.mpf(10) ** -6
    hi = lo + 40
    for _ in range(200):
        mid = (lo + hi) / 2
        if rho(q_family(beta, mid)[0]) > 1:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


def kkt_closed(beta, mu):
    Q, Qm, Qt, Qtm = q_family(mp.mpf(beta), mp.mpf(mu))
    I4 = mp.eye(4)
    a = mp.inverse(I4 - Q) * Qm
    b = mp.inverse(I4 - Qt) * Qtm
    return sum(a[i, i] for i in range(4)) - sum(b[i, i] for i in range(4))


def states(smax):
    out = []
    for s in range(2, smax + 1):
        for tail in itertools.product((0, 1), repeat=s - 1):
            kinds = (0,) + tail
            if 1 not in kinds:
                continue
            for spins in itertools.product((1, -1), repeat=s):
                out.append((kinds, spins))
    return out


def build_K(beta, mu, smax):
    st = states(smax)
    info = []
    for kinds, spins in st:
        s = len(kinds)
        H = -sum(spins[l] * spins[(l + 1) % s] for l in range(s))
        ups = [spins[l] for l in range(s) if kinds[l] == 0]
        downs = [spins[l] for l in range(s) if kinds[l] == 1]
        info.append((s, H, ups, downs))
    n = len(st)
    K = np.zeros((n, n))
    for a, (s, H, ups, downs) in enumerate(info):
        for b, (s2, H2, ups2, downs2) in enumerate(info):
            if len(downs) != len(ups2):
                continue
            V = -sum(d * x for d, x in zip(downs, ups2))
            K[a, b] = math.exp(-mu / 2 * (s + s2) - beta / 2 * (H + H2) - beta * V)
    return K


def emit(name, value):
    print(f"inline constexpr double {name} = {mp.nstr(mp.mpf(value), 17)};")


if __name__ == "__main__":
    g = mp.mpf("0.25")
    L, r = pure_eigs(g)
    emit("kLambdaQuarter", L)
    emit("kLambdaRootQuarter", r)
    emit("kPhi2Quarter", 2 * r ** 2)
    emit("kP11Quarter", g * g / L)
    emit("kPi1Quarter", (1 - L) ** 2)
    emit("kMeanWidthQuarter", mp.nsum(lambda n: n * n * L ** n * (1 - L) ** 2 / L, [1, mp.inf]))
    emit("kRowSum1Quarter", mp.nsum(lambda k: u(1, int(k), g), [1, mp.inf]))
    emit("kRowSum2Quarter", mp.nsum(lambda k: u(2, int(k), g), [1, mp.inf]))
    emit("kLambdaPlusBeta1Mu2", mp.e ** -1 + mp.e ** -3)
    z = mp.mpf(0)
    for seq in itertools.product(range(1, 5), repeat=3):
        z += u(seq[0], seq[1], g) * u(seq[1], seq[2], g) * u(seq[2], seq[0], g)
    emit("kZ3Quarter_nmax4", z)
    for beta in ("0", "0.5", "1", "2"):
        emit("kMuStarBeta" + beta.replace(".", "p"), mu_star(beta))
    emit("kKKTClosed_b05_m3", kkt_closed("0.5", "3.0"))
    for smax in (4, 5, 6):
        K = build_K(0.5, 3.0, smax)
        emit(f"kKKTDirect_b05_m3_s{smax}", (K * K).sum())
    K = build_K(0.3, 2.5, 4)
    emit("kXi2_b03_m25_s4", np.trace(K @ K))
    emit("kXi3_b03_m25_s4", np.trace(K @ K @ K))
    ev = np.linalg.eigvals(K)
    emit("kLambda0_b03_m25_s4", max(abs(ev)))
    K = build_K(0.3, 2.5, 6)
    ev = np.linalg.eigvals(K)
    emit("kLambda0_b03_m25_s6", max(abs(ev)))
    K = build_K(0.7, 3.0, 5)
    emit("kXi4_b07_m3_s5", np.trace(np.linalg.matrix_power(K, 4)))
