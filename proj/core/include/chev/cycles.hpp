#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chev/arrangement.hpp"
#include "chev/chevalley.hpp"
#include "chev/relations.hpp"

namespace chev {

struct Word {
  GroupModel model;
  std::vector<Letter> letters;

  /// One letter per line.
  std::string to_string() const;
};

/// One letter per line; blank lines and lines starting with '#' are skipped.
/// w and h letters are expanded into x-letters.
Word parse_word(std::string_view text, const GroupModel& model);

/// Ordered product of the letter matrices; I for the empty word.
Matrix word_eval(const Word& w);

struct Stability {
  bool stable = false;
  CartanVector witness;
};

/// Stable iff some point of the region makes every letter root negative.
Stability is_stable_word(const Word& w, const Plane& region);

enum class MoveKind { FreeCancellation, RelationSubstitution, ConjugationPush };
const char* to_string(MoveKind k);

/// Replaces letters [position, position + removed) by the inserted letters;
/// a ConjugationPush instead rotates the first `position` letters to the end.
struct ReductionMove {
  MoveKind kind = MoveKind::FreeCancellation;
  std::optional<RelationId> relation;
  std::size_t position = 0;
  std::size_t removed = 0;
  std::vector<Letter> inserted;
  Stability stability;
};

Word apply_move(const Word& w, const ReductionMove& m);

struct ReductionTrace {
  Word initial;
  std::vector<ReductionMove> moves;
  Word final_word;
  bool complete = false;
  /// Why the search stopped early, empty when complete.
  std::string reason;
};

inline constexpr std::size_t kDefaultBudget = 10000;

/// Rewrites an identity word to the empty word. Throws NotACycle if the word
/// does not evaluate to I. On budget exhaustion or a stuck word the trace is
/// returned with complete = false.
ReductionTrace reduce_cycle(const Word& w, const Plane& region, std::size_t budget = kDefaultBudget);

/// Re-applies every move and checks the evaluation never changes and the
/// result is the recorded final word. Returns the first failing move index.
std::optional<std::size_t> replay(const ReductionTrace& t);

struct NamedWord {
  RelationId relation;
  std::string label;
  Word word;
};

/// lhs * rhs^-1 as x-letter words for additivity, commutator, trivial
/// commutator and h-multiplicativity, at fixed sample parameters.
std::vector<NamedWord> relation_words(const GroupModel& model);

/// The 12-letter word h_r(s) h_r(t) h_r(st)^-1, with h^-1 = w(ref) w(-t)
/// and the middle w(-ref) w(ref) cancelled.
Word h_multiplicativity_word(const GroupModel& model, const Root& r, const Param& s, const Param& t);

struct BracketDecomposition {
  Letter target;
  Letter left;   // x_p(u)
  Letter right;  // x_q(1)
  CartanVector left_witness;
  CartanVector right_witness;
  /// Pairs (p, q) rejected before the answer, as "p|q: reason".
  std::vector<std::string> tried;
  /// "[x p (u), x q (1)]".
  std::string expression() const;
};

/// Finds x_target(c) = [x_p(u), x_q(1)] with p + q the target root, the
/// commutator having no other factor, and each of p, q jointly stable with
/// the companion roots on the region. Pairs are tried with q in root-system
/// order. Throws NoDecomposition listing the exhausted pairs.
BracketDecomposition bracket_decompose(const GroupModel& model, const Letter& target, const Plane& region,
                                       const std::vector<Root>& companions = {});

}  // namespace chev
