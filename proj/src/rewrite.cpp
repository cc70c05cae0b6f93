#include "jordan/rewrite.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "jordan/error.hpp"

namespace jordan {

DeglexOrder::DeglexOrder(std::string ascending) : ascending_(std::move(ascending)) {
  if (ascending_.empty()) throw InvalidRewriteSystem("empty alphabet");
  std::set<char> seen(ascending_.begin(), ascending_.end());
  if (seen.size() != ascending_.size()) throw InvalidRewriteSystem("repeated letter in alphabet");
}

bool DeglexOrder::less(const Monomial& a, const Monomial& b) const {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const auto& wa = a.word();
  const auto& wb = b.word();
  for (std::size_t i = 0; i < wa.size(); ++i) {
    if (wa[i] != wb[i]) return ascending_.find(wa[i]) < ascending_.find(wb[i]);
  }
  return false;
}

RewriteSystem::RewriteSystem(std::string alphabet_ascending, std::vector<Rule> rules)
    : order_(std::move(alphabet_ascending)), rules_(std::move(rules)) {
  auto check_letters = [&](const Monomial& m) {
    for (char c : m.word())
      if (!order_.contains(c))
        throw InvalidRewriteSystem(std::string("letter '") + c + "' is not in the alphabet");
  };
  for (const auto& rule : rules_) {
    if (rule.lead.is_identity()) throw InvalidRewriteSystem("rule with empty leading word");
    check_letters(rule.lead);
    for (const auto& [m, c] : rule.tail.terms()) {
      check_letters(m);
      if (!order_.less(m, rule.lead)) {
        throw InvalidRewriteSystem("tail term " + m.str() + " is not smaller than lead " + rule.lead.str());
      }
    }
  }
}

RewriteSystem RewriteSystem::jordan() {
  NcPoly tail = NcPoly(Monomial("yx")) + NcPoly(Monomial("yy"));
  return RewriteSystem("yx", {Rule{Monomial("xy"), std::move(tail)}});
}

bool RewriteSystem::is_normal(const Monomial& w) const {
  for (const auto& r : rules_)
    if (w.word().find(r.lead.word()) != std::string::npos) return false;
  return true;
}

NcPoly RewriteSystem::rewrite_at(const Monomial& w, std::size_t rule, std::size_t pos) const {
  const Rule& r = rules_.at(rule);
  const std::string& word = w.word();
  if (word.compare(pos, r.lead.degree(), r.lead.word()) != 0)
    throw OutOfRange("rule lead does not occur at the given position");
  const Monomial prefix(word.substr(0, pos));
  const Monomial suffix(word.substr(pos + r.lead.degree()));
  return NcPoly(prefix) * r.tail * NcPoly(suffix);
}

NcPoly RewriteSystem::reduce(const NcPoly& f) const {
  auto cmp = [this](const Monomial& a, const Monomial& b) { return order_.less(b, a); };
  std::map<Monomial, Rational, decltype(cmp)> pending(cmp);
  for (const auto& [m, c] : f.terms()) pending.emplace(m, c);

  NcPoly out;
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const Monomial& w = node.key();
    const Rational& c = node.mapped();
    if (c.is_zero()) continue;
    // Rightmost occurrence, i.e. innermost when the word is read as the
    // right-nested product a*(b*(c*...)); among leads starting there, the
    // shortest. The suffix after the rewrite position stays normal, which keeps
    // the number of intermediate words polynomial for the Jordan rule.
    std::size_t best_pos = std::string::npos;
    std::size_t best_rule = 0;
    for (std::size_t i = 0; i < rules_.size(); ++i) {
      const std::size_t p = w.word().rfind(rules_[i].lead.word());
      if (p == std::string::npos) continue;
      if (best_pos == std::string::npos || p > best_pos ||
          (p == best_pos && rules_[i].lead.degree() < rules_[best_rule].lead.degree())) {
        best_pos = p;
        best_rule = i;
      }
    }
    if (best_pos == std::string::npos) {
      out.add_term(w, c);
      continue;
    }
    const NcPoly replaced = rewrite_at(w, best_rule, best_pos);
    for (const auto& [m, d] : replaced.terms()) {
      auto [it, inserted] = pending.emplace(m, c * d);
      if (!inserted) it->second += c * d;
    }
  }
  return out;
}

std::vector<Overlap> overlaps(const RewriteSystem& rs) {
  std::vector<Overlap> out;
  const auto& rules = rs.rules();
  for (std::size_t i = 0; i < rules.size(); ++i) {
    const std::string& u = rules[i].lead.word();
    for (std::size_t j = 0; j < rules.size(); ++j) {
      const std::string& v = rules[j].lead.word();
      const std::size_t max_k = std::min(u.size(), v.size());
      for (std::size_t k = 1; k < max_k; ++k) {
        if (u.compare(u.size() - k, k, v, 0, k) == 0) {
          out.push_back({Monomial(u + v.substr(k)), i, j});
        }
      }
    }
  }
  return out;
}

namespace {

struct Ambiguity {
  Monomial word;
  std::size_t left_rule, left_pos, right_rule, right_pos;
  Overlap as_overlap;
};

std::vector<Ambiguity> ambiguities(const RewriteSystem& rs) {
  std::vector<Ambiguity> out;
  for (const auto& o : overlaps(rs)) {
    const std::size_t right_pos = o.word.degree() - rs.rules()[o.right_rule].lead.degree();
    out.push_back({o.word, o.left_rule, 0, o.right_rule, right_pos, o});
  }
  const auto& rules = rs.rules();
  for (std::size_t i = 0; i < rules.size(); ++i) {
    for (std::size_t j = 0; j < rules.size(); ++j) {
      if (i == j) continue;
      const std::string& big = rules[i].lead.word();
      const std::string& small = rules[j].lead.word();
      for (std::size_t p = big.find(small); p != std::string::npos; p = big.find(small, p + 1)) {
        out.push_back({rules[i].lead, i, 0, j, p, Overlap{rules[i].lead, i, j}});
      }
    }
  }
  return out;
}

}  // namespace

ConfluenceReport confluence_check(const RewriteSystem& rs, std::size_t max_degree) {
  ConfluenceReport report;
  for (const auto& a : ambiguities(rs)) {
    if (a.word.degree() > max_degree) {
      ++report.skipped;
      continue;
    }
    ++report.checked;
    NcPoly left = rs.reduce(rs.rewrite_at(a.word, a.left_rule, a.left_pos));
    NcPoly right = rs.reduce(rs.rewrite_at(a.word, a.right_rule, a.right_pos));
    if (left != right) {
      report.confluent = false;
      report.failures.push_back({a.as_overlap, std::move(left), std::move(right)});
    }
  }
  return report;
}

RewriteSystem complete(const RewriteSystem& rs, std::size_t max_degree) {
  RewriteSystem current = rs;
  for (;;) {
    const ConfluenceReport report = confluence_check(current, max_degree);
    if (report.confluent) return current;
    std::vector<Rule> rules = current.rules();
    bool added = false;
    for (const auto& failure : report.failures) {
      NcPoly diff = current.reduce(failure.left_normal_form - failure.right_normal_form);
      if (diff.is_zero()) continue;
      Monomial lead = diff.terms().begin()->first;
      for (const auto& [m, c] : diff.terms())
        if (current.order().less(lead, m)) lead = m;
      const Rational lc = diff.terms().at(lead);
      NcPoly tail = diff - NcPoly(lead, lc);
      tail *= Rational(-1) / lc;
      const bool duplicate = std::any_of(rules.begin(), rules.end(), [&](const Rule& r) {
        return r.lead == lead && r.tail == tail;
      });
      if (!duplicate) {
        rules.push_back({lead, std::move(tail)});
        added = true;
      }
      // one rule per round keeps later S-polynomials reduced against it
      if (added) break;
    }
    if (!added) return current;
    current = RewriteSystem(current.order().alphabet(), std::move(rules));
  }
}

Integer count_normal_words(const RewriteSystem& rs, std::size_t length) {
  std::size_t window = 0;
  for (const auto& r : rs.rules()) window = std::max(window, r.lead.degree());
  const std::size_t keep = window > 0 ? window - 1 : 0;
  const std::string& letters = rs.order().alphabet();

  auto ends_with_lead = [&](const std::string& s) {
    for (const auto& r : rs.rules()) {
      const std::string& l = r.lead.word();
      if (s.size() >= l.size() && s.compare(s.size() - l.size(), l.size(), l) == 0) return true;
    }
    return false;
  };

  std::map<std::string, Integer> states{{"", Integer(1)}};
  for (std::size_t step = 0; step < length; ++step) {
    std::map<std::string, Integer> next;
    for (const auto& [suffix, count] : states) {
      for (char c : letters) {
        std::string s = suffix + c;
        if (ends_with_lead(s)) continue;
        if (s.size() > keep) s.erase(0, s.size() - keep);
        next[s] += count;
      }
    }
    states = std::move(next);
  }
  Integer total = 0;
  for (const auto& [suffix, count] : states) total += count;
  return total;
}

}  // namespace jordan
