#include "schubert/tuple.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <sstream>

namespace schubert {

namespace {

std::string join_entries(std::span<const int> entries) {
  std::ostringstream out;
  out << '[';
  for (std::size_t j = 0; j < entries.size(); ++j) {
    if (j) out << ',';
    out << entries[j];
  }
  out << ']';
  return out.str();
}

}  // namespace

void require_increasing_positive(std::span<const int> entries) {
  if (entries.empty()) throw Error(ErrorKind::invalid_tuple, "tuple must be nonempty");
  if (entries.front() < 1)
    throw Error(ErrorKind::invalid_tuple, join_entries(entries) + " has a non-positive entry");
  for (std::size_t j = 1; j < entries.size(); ++j) {
    if (entries[j] <= entries[j - 1])
      throw Error(ErrorKind::invalid_tuple,
                  join_entries(entries) + " is not strictly increasing");
  }
}

GammaTuple::GammaTuple(int n, std::vector<int> entries) : n_(n), entries_(std::move(entries)) {
  if (n_ < 1) throw Error(ErrorKind::invalid_tuple, "n must be positive");
  require_increasing_positive(entries_);
  if (entries_.size() > static_cast<std::size_t>(n_))
    throw Error(ErrorKind::invalid_tuple, "tuple length exceeds n");
  if (entries_.back() > n_)
    throw Error(ErrorKind::invalid_tuple,
                join_entries(entries_) + " has an entry above n=" + std::to_string(n_));
}

GammaTuple GammaTuple::bottom(int d, int n) {
  if (d < 1) throw Error(ErrorKind::invalid_tuple, "d must be positive");
  std::vector<int> e(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) e[static_cast<std::size_t>(j)] = j + 1;
  return GammaTuple(n, std::move(e));
}

GammaTuple GammaTuple::top(int d, int n) {
  if (d < 1) throw Error(ErrorKind::invalid_tuple, "d must be positive");
  std::vector<int> e(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) e[static_cast<std::size_t>(j)] = n - d + 1 + j;
  return GammaTuple(n, std::move(e));
}

bool GammaTuple::is_top() const noexcept { return entries_.front() == n_ - d() + 1; }

bool GammaTuple::is_bottom() const noexcept { return entries_.back() == d(); }

std::string GammaTuple::to_string() const { return join_entries(entries_); }

std::vector<int> parse_entries(std::string_view text) {
  std::vector<int> out;
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  skip_space();
  if (pos < text.size() && text[pos] == '[') ++pos;
  while (true) {
    skip_space();
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc{})
      throw Error(ErrorKind::invalid_tuple, "cannot parse tuple '" + std::string(text) + "'");
    out.push_back(value);
    pos = static_cast<std::size_t>(ptr - text.data());
    skip_space();
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      continue;
    }
    break;
  }
  if (pos < text.size() && text[pos] == ']') ++pos;
  skip_space();
  if (pos != text.size())
    throw Error(ErrorKind::invalid_tuple, "trailing characters in tuple '" + std::string(text) + "'");
  return out;
}

BlockGapDecomposition decompose(const GammaTuple& gamma) {
  BlockGapDecomposition dec;
  dec.n = gamma.n();
  auto a = gamma.entries();
  IntInterval block{a[0], a[0]};
  for (std::size_t j = 1; j < a.size(); ++j) {
    if (a[j] == block.last + 1) {
      block.last = a[j];
    } else {
      dec.blocks.push_back(block);
      block = {a[j], a[j]};
    }
  }
  dec.blocks.push_back(block);
  // The gap after the final block runs up to a_{d+1} = n + 1.
  for (std::size_t i = 0; i < dec.blocks.size(); ++i) {
    int next = i + 1 < dec.blocks.size() ? dec.blocks[i + 1].first : gamma.n() + 1;
    dec.gaps.push_back({dec.blocks[i].last + 1, next - 1});
  }
  dec.s = static_cast<int>(dec.blocks.size()) - 1;
  dec.t = a.back() < gamma.n() ? dec.s : dec.s - 1;
  return dec;
}

GammaTuple reassemble(const BlockGapDecomposition& dec) {
  std::vector<int> entries;
  for (const auto& b : dec.blocks)
    for (int x = b.first; x <= b.last; ++x) entries.push_back(x);
  return GammaTuple(dec.n, std::move(entries));
}

KappaProfile kappa_profile(const BlockGapDecomposition& dec) {
  if (dec.t < 0)
    throw Error(ErrorKind::degenerate_top_tuple,
                "kappa numbers are undefined for [n-d+1,...,n]");
  const auto t = static_cast<std::size_t>(dec.t);
  KappaProfile profile;
  profile.kappas.reserve(t + 1);
  for (std::size_t i = 0; i <= t; ++i) {
    int k = 0;
    for (std::size_t j = 0; j <= i; ++j) k += dec.blocks[j].size();
    for (std::size_t j = i; j <= t; ++j) k += dec.gaps[j].size();
    profile.kappas.push_back(k);
  }
  profile.kappa_max = *std::ranges::max_element(profile.kappas);
  profile.kappa_min = *std::ranges::min_element(profile.kappas);
  return profile;
}

int fpt(const GammaTuple& gamma) {
  if (gamma.is_top()) return 1;
  return kappa_profile(decompose(gamma)).kappa_min;
}

int neg_a_invariant(const GammaTuple& gamma) {
  if (gamma.is_top()) return 1;
  return kappa_profile(decompose(gamma)).kappa_max;
}

GammaTuple twist(const GammaTuple& a) {
  const int d = a.d();
  std::vector<int> b(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i)
    b[static_cast<std::size_t>(i)] = a.n() - a[static_cast<std::size_t>(d - 1 - i)] + 1;
  return GammaTuple(a.n(), std::move(b));
}

int m_value_at(std::span<const int> a, int j) {
  if (j < 1 || static_cast<std::size_t>(j) > a.size())
    throw Error(ErrorKind::index_out_of_range, "position " + std::to_string(j));
  const int aj = a[static_cast<std::size_t>(j - 1)];
  if (aj <= j)
    throw Error(ErrorKind::invalid_argument,
                "m(a, j) needs a_j > j, position " + std::to_string(j));
  return aj - 2 * j;
}

int m_value(std::span<const int> a) {
  require_increasing_positive(a);
  bool found = false;
  int best = std::numeric_limits<int>::min();
  for (std::size_t j = 0; j < a.size(); ++j) {
    const int pos = static_cast<int>(j) + 1;
    if (a[j] > pos) {
      best = std::max(best, a[j] - 2 * pos);
      found = true;
    }
  }
  if (!found) throw Error(ErrorKind::bottom_tuple, "m is undefined on [1,...,d]");
  return best;
}

std::vector<GammaTuple> upper_neighbors(const GammaTuple& gamma) {
  const auto dec = decompose(gamma);
  std::vector<GammaTuple> out;
  std::vector<int> e(gamma.entries().begin(), gamma.entries().end());
  std::size_t end = 0;  // one past the last entry of the current block
  for (int i = 0; i <= dec.t; ++i) {
    end += static_cast<std::size_t>(dec.blocks[static_cast<std::size_t>(i)].size());
    ++e[end - 1];
    out.emplace_back(gamma.n(), e);
    --e[end - 1];
  }
  return out;
}

bool is_gorenstein(const BlockGapDecomposition& dec) {
  for (int i = 1; i <= dec.t; ++i) {
    if (dec.gaps[static_cast<std::size_t>(i - 1)].size() !=
        dec.blocks[static_cast<std::size_t>(i)].size())
      return false;
  }
  return true;
}

bool is_prime(std::uint64_t p) noexcept {
  if (p < 2) return false;
  for (std::uint64_t q = 2; q <= p / q; ++q)
    if (p % q == 0) return false;
  return true;
}

std::uint64_t nu_e_predicted(const GammaTuple& gamma, std::uint64_t p, unsigned e) {
  if (!is_prime(p))
    throw Error(ErrorKind::invalid_argument, std::to_string(p) + " is not prime");
  if (e < 1) throw Error(ErrorKind::invalid_argument, "e must be positive");
  const auto kappa_min =
      static_cast<std::uint64_t>(kappa_profile(decompose(gamma)).kappa_min);
  std::uint64_t power = 1;
  for (unsigned k = 0; k < e; ++k) {
    if (__builtin_mul_overflow(power, p, &power))
      throw Error(ErrorKind::overflow, "p^e does not fit in 64 bits");
  }
  std::uint64_t result = 0;
  if (__builtin_mul_overflow(kappa_min, power - 1, &result))
    throw Error(ErrorKind::overflow, "kappa' * (p^e - 1) does not fit in 64 bits");
  return result;
}

}  // namespace schubert
