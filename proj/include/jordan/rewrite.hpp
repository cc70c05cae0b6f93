#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "jordan/ncpoly.hpp"

namespace jordan {

/// Degree-lexicographic order on words; `ascending` lists the alphabet from
/// smallest to largest letter ("yx" means y < x).
class DeglexOrder {
 public:
  explicit DeglexOrder(std::string ascending);
  bool less(const Monomial& a, const Monomial& b) const;
  bool contains(char letter) const { return ascending_.find(letter) != std::string::npos; }
  const std::string& alphabet() const { return ascending_; }

 private:
  std::string ascending_;
};

/// lead -> tail, read as the relation lead - tail = 0.
struct Rule {
  Monomial lead;
  NcPoly tail;
};

/// Rules oriented by a deglex order. Construction rejects rules whose tail is
/// not strictly smaller than the lead, or that use letters outside the alphabet.
class RewriteSystem {
 public:
  RewriteSystem(std::string alphabet_ascending, std::vector<Rule> rules);

  /// {xy -> yx + y^2} over y < x.
  static RewriteSystem jordan();

  const DeglexOrder& order() const { return order_; }
  const std::vector<Rule>& rules() const { return rules_; }

  bool is_normal(const Monomial& w) const;
  /// Rewrites every term until no lead occurs. Each step uses the rightmost
  /// occurrence in the largest reducible term; terminates since deglex is admissible.
  NcPoly reduce(const NcPoly& f) const;
  /// Result of applying rule `rule` once at offset `pos` of `w`.
  NcPoly rewrite_at(const Monomial& w, std::size_t rule, std::size_t pos) const;

 private:
  DeglexOrder order_;
  std::vector<Rule> rules_;
};

/// w = lead(left) * b = a * lead(right) with a, b nonempty and the two
/// occurrences sharing at least one letter.
struct Overlap {
  Monomial word;
  std::size_t left_rule = 0;
  std::size_t right_rule = 0;
  friend bool operator==(const Overlap&, const Overlap&) = default;
};

std::vector<Overlap> overlaps(const RewriteSystem& rs);

struct ConfluenceFailure {
  Overlap overlap;
  NcPoly left_normal_form;
  NcPoly right_normal_form;
};

struct ConfluenceReport {
  bool confluent = true;
  std::size_t checked = 0;   // ambiguities of degree <= max_degree that were resolved
  std::size_t skipped = 0;   // ambiguities above max_degree
  std::vector<ConfluenceFailure> failures;
};

/// Checks every overlap (and every inclusion of one lead inside another) of
/// degree at most max_degree: both one-step reductions must reach the same
/// normal form.
ConfluenceReport confluence_check(const RewriteSystem& rs, std::size_t max_degree);

/// Adds the unresolved S-polynomials of degree <= max_degree as new rules until
/// every ambiguity up to that degree resolves.
RewriteSystem complete(const RewriteSystem& rs, std::size_t max_degree);

/// Number of words of the given length that contain no lead.
Integer count_normal_words(const RewriteSystem& rs, std::size_t length);

}  // namespace jordan
