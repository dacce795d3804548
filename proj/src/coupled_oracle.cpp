// Copyright 2026 The cdtising Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cdtising/coupled_oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <istream>
#include <map>
#include <ostream>
#include <string>

#include "cdtising/errors.hpp"

namespace cdtising {

namespace {

void check_state_cap(int s_max, int cap, const char* what) {
  if (s_max < 2) throw DomainError(std::string(what) + ": s_max must be >= 2");
  if (s_max > cap) {
    throw ResourceError(std::string(what) + ": s_max = " + std::to_string(s_max) +
                        " exceeds the cap of " + std::to_string(cap));
  }
}

// Spins of a given kind packed into a bitmask, bit k set when the k-th such
// triangle (root-anchored order) carries spin -1.
struct Interface {
  int count = 0;
  std::uint32_t minus_mask = 0;
};

Interface interface_of(const CoupledState& st, Kind kind) {
  Interface out;
  for (std::size_t l = 0; l < st.strip.size(); ++l) {
    if (st.strip[l] != kind) continue;
    if (st.spins[l] < 0) out.minus_mask |= (1u << out.count);
    ++out.count;
  }
  return out;
}

// sum_k d_k u_k for two equal-length interfaces.
int overlap(const Interface& d, const Interface& u) {
  return d.count - 2 * std::popcount(d.minus_mask ^ u.minus_mask);
}

struct StateSummary {
  double half_weight = 0.0;  // exp(-(mu s + beta H) / 2)
  Interface down;
  Interface up;
};

std::vector<StateSummary> summarise(const std::vector<CoupledState>& states, const Params& p) {
  std::vector<StateSummary> out;
  out.reserve(states.size());
  for (const auto& st : states) {
    const double energy = strip_energy(st.strip, st.spins);
    out.push_back({std::exp(-0.5 * (p.mu() * st.size() + p.beta() * energy)),
                   interface_of(st, Kind::Down), interface_of(st, Kind::Up)});
  }
  return out;
}

template <typename T>
void put(std::ostream& out, T value) {
  out.write(reinterpret_cast<const char*>(&value), sizeof(T));
}

template <typename T>
T get(std::istream& in) {
  T value{};
  in.read(reinterpret_cast<char*>(&value), sizeof(T));
  if (!in) throw IoError("operator dump: unexpected end of stream");
  return value;
}

static_assert(std::endian::native == std::endian::little,
              "operator dump layout assumes a little-endian host");

}  // namespace

long long states_of_size(int s) {
  if (s < 2) return 0;
  return ((1LL << (s - 1)) - 1) * (1LL << s);
}

std::vector<CoupledState> enumerate_states(int s_max) {
  check_state_cap(s_max, kMaxStateStripSize, "enumerate_states");
  std::vector<CoupledState> out;
  for (int s = 2; s <= s_max; ++s) {
    std::vector<StripTriangulation> strips;
    for (int up = 1; up < s; ++up) {
      auto part = enumerate_strips(up, s - up, s_max);
      strips.insert(strips.end(), part.begin(), part.end());
    }
    std::sort(strips.begin(), strips.end());
    for (const auto& strip : strips) {
      for (std::uint32_t mask = 0; mask < (1u << s); ++mask) {
        std::vector<int> signs(s);
        for (int l = 0; l < s; ++l) signs[l] = (mask >> (s - 1 - l)) & 1u ? -1 : +1;
        out.push_back({strip, SpinConfiguration(std::move(signs))});
      }
    }
  }
  return out;
}

double k_entry(const CoupledState& a, const CoupledState& b, const Params& p) {
  if (a.strip.down_count() != b.strip.up_count()) return 0.0;
  const double h = strip_energy(a.strip, a.spins) + strip_energy(b.strip, b.spins);
  const double v = interaction_energy(a.strip, a.spins, b.strip, b.spins);
  return std::exp(-0.5 * p.mu() * (a.size() + b.size()) - 0.5 * p.beta() * h - p.beta() * v);
}

CoupledOperator build_truncated_K(const Params& p, int s_max) {
  check_state_cap(s_max, kMaxDenseStripSize, "build_truncated_K");
  CoupledOperator k;
  k.s_max = s_max;
  k.states = enumerate_states(s_max);
  const auto summary = summarise(k.states, p);
  const auto n = static_cast<Eigen::Index>(k.states.size());
  k.entries = Eigen::MatrixXd::Zero(n, n);
  // exp(beta * overlap) for overlap in [-s_max, s_max].
  std::vector<double> coupling(2 * s_max + 1);
  for (int o = -s_max; o <= s_max; ++o) coupling[o + s_max] = std::exp(p.beta() * o);
  for (Eigen::Index a = 0; a < n; ++a) {
    const auto& lower = summary[a];
    for (Eigen::Index b = 0; b < n; ++b) {
      const auto& upper = summary[b];
      if (lower.down.count != upper.up.count) continue;
      k.entries(a, b) = lower.half_weight * upper.half_weight *
                        coupling[overlap(lower.down, upper.up) + s_max];
    }
  }
  return k;
}

std::vector<int> spin_flip_permutation(const std::vector<CoupledState>& states) {
  std::map<std::pair<std::string, std::vector<int>>, int> index;
  for (std::size_t i = 0; i < states.size(); ++i) {
    index[{states[i].strip.to_string(), states[i].spins.signs()}] = static_cast<int>(i);
  }
  std::vector<int> perm(states.size());
  for (std::size_t i = 0; i < states.size(); ++i) {
    const auto it = index.find({states[i].strip.to_string(), states[i].spins.flipped().signs()});
    if (it == index.end()) throw ConsistencyError("state set is not closed under spin flip");
    perm[i] = it->second;
  }
  return perm;
}

namespace {

// tr(A B) without forming A B; one dot product per row keeps the rounding
// of the positive sum at the level of a single row.
double trace_of_product(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  double sum = 0.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i) sum += a.row(i).dot(b.col(i));
  return sum;
}

}  // namespace

std::vector<double> xi_n_traces(const CoupledOperator& k, std::span<const int> n_list) {
  // squares[j] = K^(2^j), built on demand.
  std::vector<Eigen::MatrixXd> squares;
  squares.reserve(32);
  squares.push_back(k.entries);
  auto square = [&](int j) -> const Eigen::MatrixXd& {
    while (static_cast<int>(squares.size()) <= j) {
      Eigen::MatrixXd next(k.entries.rows(), k.entries.cols());
      next.noalias() = squares.back() * squares.back();
      squares.push_back(std::move(next));
    }
    return squares[j];
  };
  std::vector<double> out;
  out.reserve(n_list.size());
  for (int N : n_list) {
    if (N < 1) throw DomainError("xi_n_traces: N must be >= 1");
    if (N == 1) {
      out.push_back(k.entries.trace());
      continue;
    }
    std::vector<int> bits;
    for (int j = 0; (N >> j) != 0; ++j) {
      if ((N >> j) & 1) bits.push_back(j);
    }
    if (bits.size() == 1) {
      const auto& half = square(bits[0] - 1);
      out.push_back(trace_of_product(half, half));
      continue;
    }
    Eigen::MatrixXd left = square(bits[0]);
    for (std::size_t i = 1; i + 1 < bits.size(); ++i) {
      Eigen::MatrixXd tmp(left.rows(), left.cols());
      tmp.noalias() = left * square(bits[i]);
      left.swap(tmp);
    }
    out.push_back(trace_of_product(left, square(bits.back())));
  }
  return out;
}

double xi_n_truncated(int N, const Params& p, int s_max) {
  if (N < 1) throw DomainError("xi_n_truncated: N must be >= 1");
  const auto k = build_truncated_K(p, s_max);
  const int n[] = {N};
  return xi_n_traces(k, n).front();
}

double trace_KKT_direct(const Params& p, int s_max) {
  const auto states = enumerate_states(s_max);
  const auto summary = summarise(states, p);
  // as_lower[k][mask]: total squared half-weight of states whose k down-spins
  // read mask; as_upper likewise for up-spins.
  std::vector<std::vector<double>> as_lower(s_max), as_upper(s_max);
  for (int k = 1; k < s_max; ++k) {
    as_lower[k].assign(1u << k, 0.0);
    as_upper[k].assign(1u << k, 0.0);
  }
  for (const auto& st : summary) {
    const double w = st.half_weight * st.half_weight;
    as_lower[st.down.count][st.down.minus_mask] += w;
    as_upper[st.up.count][st.up.minus_mask] += w;
  }
  double total = 0.0;
  for (int k = 1; k < s_max; ++k) {
    for (std::uint32_t d = 0; d < (1u << k); ++d) {
      if (as_lower[k][d] == 0.0) continue;
      double row = 0.0;
      for (std::uint32_t u = 0; u < (1u << k); ++u) {
        const int o = k - 2 * std::popcount(d ^ u);
        row += as_upper[k][u] * std::exp(2.0 * p.beta() * o);
      }
      total += as_lower[k][d] * row;
    }
  }
  return total;
}

double trace_KKT_direct_pairwise(const Params& p, int s_max) {
  const auto states = enumerate_states(s_max);
  long double total = 0.0L;
  for (const auto& a : states) {
    for (const auto& b : states) {
      const long double e = k_entry(a, b, p);
      total += e * e;
    }
  }
  return static_cast<double>(total);
}

SpectralReport principal_eigenvalue_K(const CoupledOperator& k) {
  return power_iteration(k.entries);
}

SpectralReport principal_eigenvalue_K(const Params& p, int s_max) {
  return principal_eigenvalue_K(build_truncated_K(p, s_max));
}

void write_operator_dump(std::ostream& out, const CoupledOperator& k, const Params& p) {
  out.write("CDTK", 4);
  put<std::uint32_t>(out, 1);
  put<std::uint32_t>(out, static_cast<std::uint32_t>(k.s_max));
  put<std::uint64_t>(out, k.states.size());
  put<double>(out, p.beta());
  put<double>(out, p.mu());
  for (const auto& st : k.states) {
    put<std::uint8_t>(out, static_cast<std::uint8_t>(st.size()));
    for (Kind kind : st.strip.kinds()) put<std::uint8_t>(out, static_cast<std::uint8_t>(kind));
    for (int s : st.spins.signs()) put<std::int8_t>(out, static_cast<std::int8_t>(s));
  }
  for (Eigen::Index a = 0; a < k.entries.rows(); ++a) {
    for (Eigen::Index b = 0; b < k.entries.cols(); ++b) put<double>(out, k.entries(a, b));
  }
  if (!out) throw IoError("operator dump: write failed");
}

OperatorDump read_operator_dump(std::istream& in) {
  char magic[4];
  in.read(magic, 4);
  if (!in || std::memcmp(magic, "CDTK", 4) != 0) throw IoError("operator dump: bad magic");
  if (get<std::uint32_t>(in) != 1) throw IoError("operator dump: unsupported format version");
  OperatorDump dump;
  dump.op.s_max = static_cast<int>(get<std::uint32_t>(in));
  const auto n = get<std::uint64_t>(in);
  dump.beta = get<double>(in);
  dump.mu = get<double>(in);
  dump.op.states.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    const int s = get<std::uint8_t>(in);
    std::vector<Kind> kinds(s);
    std::vector<int> spins(s);
    for (auto& kind : kinds) kind = static_cast<Kind>(get<std::uint8_t>(in));
    for (auto& spin : spins) spin = get<std::int8_t>(in);
    dump.op.states.push_back({StripTriangulation(std::move(kinds)), SpinConfiguration(std::move(spins))});
  }
  dump.op.entries.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (Eigen::Index a = 0; a < dump.op.entries.rows(); ++a) {
    for (Eigen::Index b = 0; b < dump.op.entries.cols(); ++b) dump.op.entries(a, b) = get<double>(in);
  }
  return dump;
}

}  // namespace cdtising
