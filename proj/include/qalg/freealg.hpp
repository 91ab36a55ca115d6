#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "qalg/errors.hpp"
#include "qalg/scalars.hpp"

namespace qalg {

/// A word over the generators of a presentation. Generator indices are
/// assigned in precedence order, so the structural (degree, lex) order on
/// words coincides with the presentation's degree-lexicographic monomial
/// order, and subword search is plain string search.
using Word = std::basic_string<unsigned char>;

struct WordDegLex {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

inline Word word_of(std::initializer_list<unsigned char> letters) { return Word(letters); }

/// Finite K-linear combination of words; no zero coefficients stored.
template <class K>
class Poly {
public:
    using Terms = std::map<Word, K, WordDegLex>;

    Poly() = default;
    explicit Poly(K c) { add(Word(), std::move(c)); }
    static Poly gen(unsigned char g, K c = K(1)) {
        Poly p;
        p.add(Word(1, g), std::move(c));
        return p;
    }
    static Poly word(Word w, K c = K(1)) {
        Poly p;
        p.add(std::move(w), std::move(c));
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }

    void add(const Word& w, const K& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.emplace(w, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Poly& operator+=(const Poly& o) {
        for (const auto& [w, c] : o.terms_) add(w, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (const auto& [w, c] : o.terms_) add(w, -c);
        return *this;
    }
    Poly operator+(const Poly& o) const {
        Poly r = *this;
        r += o;
        return r;
    }
    Poly operator-(const Poly& o) const {
        Poly r = *this;
        r -= o;
        return r;
    }
    Poly operator-() const {
        Poly r;
        for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
        return r;
    }
    Poly operator*(const K& c) const {
        Poly r;
        if (c.is_zero()) return r;
        for (const auto& [w, k] : terms_) {
            K v = k;
            v *= c;
            if (!v.is_zero()) r.terms_.emplace(w, std::move(v));
        }
        return r;
    }
    Poly operator*(const Poly& o) const {
        Poly r;
        for (const auto& [u, a] : terms_)
            for (const auto& [v, b] : o.terms_) {
                K c = a;
                c *= b;
                r.add(u + v, c);
            }
        return r;
    }
    bool operator==(const Poly& o) const { return terms_ == o.terms_; }

    /// Largest word (deglex leading term); polynomial must be nonzero.
    const Word& lead_word() const { return terms_.rbegin()->first; }
    const K& lead_coeff() const { return terms_.rbegin()->second; }

    int degree() const { return is_zero() ? -1 : static_cast<int>(lead_word().size()); }

private:
    Terms terms_;
};

/// Serialization term order: descending by degree, ascending within a degree.
template <class K>
std::vector<const std::pair<const Word, K>*> print_order(const Poly<K>& p) {
    std::vector<const std::pair<const Word, K>*> terms;
    for (const auto& t : p.terms()) terms.push_back(&t);
    std::stable_sort(terms.begin(), terms.end(), [](const auto* x, const auto* y) {
        if (x->first.size() != y->first.size()) return x->first.size() > y->first.size();
        return x->first < y->first;
    });
    return terms;
}

template <class K>
struct RewriteRule {
    Word lhs;
    Poly<K> rhs;  // every word strictly smaller than lhs
};

struct CompletionReport {
    int added_rules = 0;
    int overlaps_checked = 0;
    int max_overlap_degree = 0;  // largest overlap word among the final rules
    bool overlaps_within_cap = true;  // every possible overlap word was within the cap
    std::vector<std::string> added;   // textual form of new rules, for reports
};

/// Oriented rewrite system over a coefficient field K. Words reduce to a
/// unique normal form once the system is confluent (certified by complete()).
template <class K>
class RuleSystem {
public:
    explicit RuleSystem(int gen_count) : ngen_(gen_count) {}

    int gen_count() const { return ngen_; }
    const std::vector<RewriteRule<K>>& rules() const { return rules_; }
    size_t rule_count() const { return rules_.size(); }

    /// Insert relations (interpreted as rel = 0) and inter-reduce into an
    /// oriented rule set.
    void add_relations(std::vector<Poly<K>> rels) {
        for (auto& p : rels) queue_.push_back(std::move(p));
        process_queue();
    }

    Poly<K> normal_form(const Poly<K>& p) const {
        Poly<K> out;
        Poly<K> work = p;
        while (!work.is_zero()) {
            Word w = work.lead_word();
            K c = work.lead_coeff();
            size_t pos = 0;
            const RewriteRule<K>* rule = find_match(w, pos);
            work.add(w, -c);
            if (!rule) {
                out.add(w, c);
                continue;
            }
            Word pre = w.substr(0, pos);
            Word suf = w.substr(pos + rule->lhs.size());
            for (const auto& [u, k] : rule->rhs.terms()) {
                K v = c;
                v *= k;
                work.add(pre + u + suf, v);
            }
        }
        return out;
    }

    bool word_is_normal(const Word& w) const {
        size_t pos;
        return find_match(w, pos) == nullptr;
    }

    /// All normal words of each degree 0..maxdeg.
    std::vector<std::vector<Word>> normal_words(int maxdeg) const {
        std::vector<std::vector<Word>> out(maxdeg + 1);
        out[0].push_back(Word());
        for (int d = 1; d <= maxdeg; ++d) {
            for (const Word& w : out[d - 1]) {
                for (int g = 0; g < ngen_; ++g) {
                    Word e = w + Word(1, static_cast<unsigned char>(g));
                    if (tail_is_normal(e)) out[d].push_back(std::move(e));
                }
            }
        }
        return out;
    }

    long normal_word_count(int d) const {
        if (d < 0) throw invalid_parameter_error("degree must be nonnegative");
        auto lists = normal_words(d);
        return static_cast<long>(lists[d].size());
    }

    /// Resolve all overlap ambiguities among rule left-hand sides whose
    /// overlap word has degree <= cap, adding oriented consequences until
    /// stable. Diamond lemma: if afterwards every possible overlap lies
    /// within the cap, the system is confluent at all degrees.
    CompletionReport complete(int cap) {
        if (cap < 3) throw invalid_parameter_error("completion cap must be >= 3");
        CompletionReport rep;
        std::set<Word, WordDegLex> original;
        for (const auto& r : rules_) original.insert(r.lhs);
        bool again = true;
        while (again) {
            again = false;
            size_t nrules = rules_.size();
            for (size_t i = 0; i < nrules && !again; ++i) {
                for (size_t j = 0; j < nrules && !again; ++j) {
                    const Word u = rules_[i].lhs;
                    const Word v = rules_[j].lhs;
                    for (size_t k = 1; k < std::min(u.size(), v.size()); ++k) {
                        // suffix of u of length k == prefix of v of length k
                        if (u.compare(u.size() - k, k, v, 0, k) != 0) continue;
                        Word w = u + v.substr(k);
                        if (static_cast<int>(w.size()) > cap) continue;
                        ++rep.overlaps_checked;
                        Poly<K> left = rules_[i].rhs * Poly<K>::word(v.substr(k));
                        Poly<K> right = Poly<K>::word(u.substr(0, u.size() - k)) * rules_[j].rhs;
                        Poly<K> d = normal_form(left - right);
                        if (!d.is_zero()) {
                            queue_.push_back(std::move(d));
                            process_queue();
                            again = true;
                            break;
                        }
                    }
                }
            }
        }
        for (const auto& r : rules_)
            if (!original.count(r.lhs)) {
                ++rep.added_rules;
                rep.added.push_back(lhs_string(r.lhs));
            }
        for (const auto& r1 : rules_)
            for (const auto& r2 : rules_)
                for (size_t k = 1; k < std::min(r1.lhs.size(), r2.lhs.size()); ++k)
                    if (r1.lhs.compare(r1.lhs.size() - k, k, r2.lhs, 0, k) == 0) {
                        int deg = static_cast<int>(r1.lhs.size() + r2.lhs.size() - k);
                        rep.max_overlap_degree = std::max(rep.max_overlap_degree, deg);
                        if (deg > cap) rep.overlaps_within_cap = false;
                    }
        return rep;
    }

private:
    int ngen_;
    std::vector<RewriteRule<K>> rules_;
    std::vector<Poly<K>> queue_;

    static std::string lhs_string(const Word& w) {
        std::string s;
        for (size_t i = 0; i < w.size(); ++i) {
            if (i) s += ".";
            s += "g" + std::to_string(static_cast<int>(w[i]));
        }
        return s;
    }

    const RewriteRule<K>* find_match(const Word& w, size_t& pos) const {
        for (const auto& r : rules_) {
            size_t p = w.find(r.lhs);
            if (p != Word::npos) {
                pos = p;
                return &r;
            }
        }
        return nullptr;
    }

    // only suffixes ending at the last letter need checking when extending
    // an already-normal word
    bool tail_is_normal(const Word& w) const {
        for (const auto& r : rules_) {
            if (r.lhs.size() > w.size()) continue;
            if (w.compare(w.size() - r.lhs.size(), r.lhs.size(), r.lhs) == 0) return false;
        }
        return true;
    }

    void process_queue() {
        while (!queue_.empty()) {
            Poly<K> p = std::move(queue_.back());
            queue_.pop_back();
            p = normal_form(p);
            if (p.is_zero()) continue;
            Word lead = p.lead_word();
            K c = p.lead_coeff();
            RewriteRule<K> rule;
            rule.lhs = lead;
            Poly<K> rest = p;
            rest.add(lead, -c);
            rule.rhs = (-rest) * c.inv();
            // displace rules whose lhs contains the new lhs
            std::vector<Poly<K>> displaced;
            for (auto it = rules_.begin(); it != rules_.end();) {
                if (it->lhs.find(lead) != Word::npos) {
                    Poly<K> rel = Poly<K>::word(it->lhs) - it->rhs;
                    displaced.push_back(std::move(rel));
                    it = rules_.erase(it);
                } else {
                    ++it;
                }
            }
            rules_.push_back(std::move(rule));
            for (auto& d : displaced) queue_.push_back(std::move(d));
        }
        // tail reduction
        for (auto& r : rules_) r.rhs = normal_form(r.rhs);
        std::sort(rules_.begin(), rules_.end(),
                  [](const RewriteRule<K>& a, const RewriteRule<K>& b) {
                      return WordDegLex{}(a.lhs, b.lhs);
                  });
    }
};

/// Element of a tensor product of presented algebras: K-combination of
/// tuples of words, one per factor.
template <class K>
class TensorPoly {
public:
    using Key = std::vector<Word>;
    using Terms = std::map<Key, K>;

    explicit TensorPoly(int arity) : arity_(arity) {}
    static TensorPoly unit(int arity, K c = K(1)) {
        TensorPoly t(arity);
        t.add(Key(arity), std::move(c));
        return t;
    }

    int arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }

    void add(const Key& k, const K& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.emplace(k, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    TensorPoly& operator+=(const TensorPoly& o) {
        for (const auto& [k, c] : o.terms_) add(k, c);
        return *this;
    }
    TensorPoly operator-(const TensorPoly& o) const {
        TensorPoly r = *this;
        for (const auto& [k, c] : o.terms_) r.add(k, -c);
        return r;
    }
    bool operator==(const TensorPoly& o) const {
        return arity_ == o.arity_ && terms_ == o.terms_;
    }

private:
    int arity_;
    Terms terms_;
};

} // namespace qalg
