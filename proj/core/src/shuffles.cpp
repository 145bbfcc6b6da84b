#include <sstream>
#include <stdexcept>

#include "qsym/combinat.hpp"

namespace qsym {

namespace {

std::vector<ShuffleEntry> interleave(const Composition& alpha, const Composition& beta, const Subset& d) {
  int total = alpha.length() + beta.length();
  if (d.grade() != total + 1 || d.size() != beta.length())
    throw std::invalid_argument("shuffle positions do not match the compositions");
  std::vector<ShuffleEntry> items;
  int ia = 0, ib = 0;
  for (int p = 1; p <= total; ++p) {
    if (d.contains(p))
      items.push_back({beta[ib++], Origin::Right});
    else
      items.push_back({alpha[ia++], Origin::Left});
  }
  return items;
}

template <class F>
void for_each_join_choice(const std::vector<ShuffleEntry>& items, bool two_way, F&& f) {
  std::size_t slots = items.empty() ? 0 : items.size() - 1;
  std::vector<Join> allowed(slots, Join::Comma);
  std::vector<std::size_t> open;
  for (std::size_t s = 0; s < slots; ++s) {
    Origin a = items[s].origin, b = items[s + 1].origin;
    if (a == Origin::Left && b == Origin::Right) {
      allowed[s] = Join::Plus1;
      open.push_back(s);
    } else if (two_way && a == Origin::Right && b == Origin::Left) {
      allowed[s] = Join::Plus2;
      open.push_back(s);
    }
  }
  std::vector<Join> joins(slots, Join::Comma);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << open.size()); ++mask) {
    for (std::size_t k = 0; k < open.size(); ++k)
      joins[open[k]] = (mask >> k) & 1u ? allowed[open[k]] : Join::Comma;
    f(joins);
  }
}

}  // namespace

Composition shuffle_at(const Composition& alpha, const Composition& beta, const Subset& d) {
  std::vector<int> parts;
  for (const auto& e : interleave(alpha, beta, d)) parts.push_back(e.value);
  return Composition(std::move(parts));
}

Multiset<Composition> comp_shuffles(const Composition& alpha, const Composition& beta) {
  Multiset<Composition> out;
  for (const auto& d : subsets_of_size(alpha.length() + beta.length(), beta.length()))
    out.insert(shuffle_at(alpha, beta, d));
  return out;
}

Multiset<Composition> overlapping_shuffles(const Composition& alpha, const Composition& beta) {
  Multiset<Composition> out;
  for (const auto& d : subsets_of_size(alpha.length() + beta.length(), beta.length())) {
    auto items = interleave(alpha, beta, d);
    for_each_join_choice(items, false, [&](const std::vector<Join>& joins) {
      out.insert(TwoWayShuffle(items, joins).plus());
    });
  }
  return out;
}

std::vector<TwoWayShuffle> two_way_shuffles(const Composition& alpha, const Composition& beta) {
  std::vector<TwoWayShuffle> out;
  for (const auto& d : subsets_of_size(alpha.length() + beta.length(), beta.length())) {
    auto items = interleave(alpha, beta, d);
    for_each_join_choice(items, true,
                         [&](const std::vector<Join>& joins) { out.emplace_back(items, joins); });
  }
  return out;
}

TwoWayShuffle::TwoWayShuffle(std::vector<ShuffleEntry> items, std::vector<Join> joins)
    : items_(std::move(items)), joins_(std::move(joins)) {
  std::size_t slots = items_.empty() ? 0 : items_.size() - 1;
  if (joins_.size() != slots) throw std::invalid_argument("two-way shuffle needs one join per gap");
  for (std::size_t s = 0; s < slots; ++s) {
    Origin a = items_[s].origin, b = items_[s + 1].origin;
    if (joins_[s] == Join::Plus1 && !(a == Origin::Left && b == Origin::Right))
      throw std::invalid_argument("+1 must join a left part to a following right part");
    if (joins_[s] == Join::Plus2 && !(a == Origin::Right && b == Origin::Left))
      throw std::invalid_argument("+2 must join a right part to a following left part");
  }
}

Composition TwoWayShuffle::plus() const {
  std::vector<int> parts;
  for (std::size_t k = 0; k < items_.size(); ++k) {
    if (k > 0 && joins_[k - 1] != Join::Comma)
      parts.back() += items_[k].value;
    else
      parts.push_back(items_[k].value);
  }
  return Composition(std::move(parts));
}

int TwoWayShuffle::c1() const {
  int c = 0;
  for (Join j : joins_) c += j == Join::Plus1;
  return c;
}

int TwoWayShuffle::c2() const {
  int c = 0;
  for (Join j : joins_) c += j == Join::Plus2;
  return c;
}

std::string TwoWayShuffle::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < items_.size(); ++k) {
    if (k > 0) {
      switch (joins_[k - 1]) {
        case Join::Comma: os << ", "; break;
        case Join::Plus1: os << " +1 "; break;
        case Join::Plus2: os << " +2 "; break;
      }
    }
    os << items_[k].value << (items_[k].origin == Origin::Left ? "a" : "b");
  }
  os << ')';
  return os.str();
}

}  // namespace qsym
