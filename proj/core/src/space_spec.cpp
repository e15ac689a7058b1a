#include "hss/space_spec.hpp"

#include <algorithm>
#include <charconv>

#include "hss/reference_tables.hpp"

namespace hss {
namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}
  std::size_t pos() const { return i_; }
  bool done() const { return i_ == s_.size(); }
  char peek() const { return done() ? '\0' : s_[i_]; }

  void expect(std::string_view lit) {
    if (s_.substr(i_, lit.size()) != lit) throw SpecError("expected '" + std::string(lit) + "'", i_);
    i_ += lit.size();
  }

  int integer() {
    const std::size_t start = i_;
    while (!done() && s_[i_] >= '0' && s_[i_] <= '9') ++i_;
    if (i_ == start) throw SpecError("expected an integer", start);
    if (i_ - start > 1 && s_[start] == '0') throw SpecError("leading zero in integer", start);
    int v = 0;
    const auto [p, ec] = std::from_chars(s_.data() + start, s_.data() + i_, v);
    if (ec != std::errc()) throw SpecError("integer out of range", start);
    return v;
  }

 private:
  std::string_view s_;
  std::size_t i_ = 0;
};

std::optional<int> default_node(Family f, int rank) {
  switch (f) {
    case Family::B: return 1;
    case Family::C: return rank;
    case Family::E6: return 6;
    case Family::E7: return 7;
    default: return std::nullopt;
  }
}

char family_letter(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
    default: return 'E';
  }
}

}  // namespace

SpaceSpec parse_space_spec(std::string_view text) {
  Cursor c(text);
  SpaceSpec s;
  const char letter = c.peek();
  if (letter < 'A' || letter > 'E') throw SpecError("expected a family letter A, B, C, D or E", 0);
  c.expect(std::string_view(&letter, 1));
  c.expect(":r=");
  const std::size_t rank_pos = c.pos();
  const int rank = c.integer();
  std::size_t k_pos = 0;
  if (!c.done()) {
    c.expect(":k=");
    k_pos = c.pos();
    s.k = c.integer();
  }
  if (!c.done()) throw SpecError("unexpected trailing input", c.pos());

  switch (letter) {
    case 'A': s.family = Family::A; break;
    case 'B': s.family = Family::B; break;
    case 'C': s.family = Family::C; break;
    case 'D': s.family = Family::D; break;
    default:
      if (rank != 6 && rank != 7) throw SpecError("family E requires r = 6 or r = 7", rank_pos);
      s.family = rank == 6 ? Family::E6 : Family::E7;
  }
  const int min_rank = s.family == Family::A ? 1 : s.family == Family::B ? 2 : s.family == Family::C ? 3 : 4;
  if (rank < min_rank)
    throw SpecError(std::string("family ") + letter + " requires r >= " + std::to_string(min_rank), rank_pos);
  if (rank > kMaxSpecRank) throw SpecError("rank above the supported maximum " + std::to_string(kMaxSpecRank), rank_pos);
  s.rank = rank;

  const std::optional<int> def = default_node(s.family, rank);
  if (!s.k && !def) throw SpecError(std::string("family ") + letter + " requires ':k=<node>'", text.size());
  const int node = s.k.value_or(def.value_or(1));
  const auto marked = reference::marked_nodes(s.family, rank);
  const std::size_t where = s.k ? k_pos : text.size();
  if (std::find(marked.begin(), marked.end(), node) == marked.end())
    throw SpecError("node " + std::to_string(node) + " is not a marked node of " + std::string(1, letter) +
                        std::to_string(rank),
                    where);
  if (s.family == Family::E6 && node == 1)
    throw SpecError("E6 node 1 is isometric to node 6; use 'E:r=6'", where);
  s.node = reference::canonical_node(s.family, rank, node);
  return s;
}

std::string to_string(const SpaceSpec& s) {
  std::string out(1, family_letter(s.family));
  out += ":r=" + std::to_string(s.rank);
  if (s.k) out += ":k=" + std::to_string(*s.k);
  return out;
}

SpaceSpec make_space_spec(Family family, int rank, int node) {
  SpaceSpec s;
  s.family = family;
  s.rank = rank;
  const std::optional<int> def = default_node(family, rank);
  if (!def || *def != node) s.k = node;
  return parse_space_spec(to_string(s));
}

std::string isometry_note(const SpaceSpec& s) {
  if (s.family == Family::D && s.requested_node() != s.node)
    return "node " + std::to_string(s.requested_node()) + " relabeled to node " + std::to_string(s.node) +
           " by the diagram automorphism";
  if (s.family == Family::A && 2 * s.node > s.rank + 1)
    return "G_" + std::to_string(s.node) + "(C^" + std::to_string(s.rank + 1) + ") is isometric to G_" +
           std::to_string(s.rank + 1 - s.node) + "(C^" + std::to_string(s.rank + 1) + ")";
  return {};
}

}  // namespace hss
