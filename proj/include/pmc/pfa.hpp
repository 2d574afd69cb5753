#ifndef PMC_PFA_HPP
#define PMC_PFA_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pmc/errors.hpp"
#include "pmc/linalg.hpp"
#include "pmc/rational.hpp"

namespace pmc {

/// A word is a sequence of alphabet-symbol names; symbols may be multi-character.
using Word = std::vector<std::string>;

/// Probabilistic finite automaton: one stochastic matrix per input symbol,
/// an initial distribution and an accepting state set. Immutable once built;
/// the constructor enforces all invariants.
class Pfa {
public:
    Pfa(std::vector<std::string> states, std::vector<std::string> alphabet,
        std::map<std::string, Matrix> matrices, RowVector initial, std::set<int> accepting)
        : states_(std::move(states)),
          alphabet_(std::move(alphabet)),
          matrices_(std::move(matrices)),
          initial_(std::move(initial)),
          accepting_(std::move(accepting)) {
        if (states_.empty()) throw ValidationError("automaton needs at least one state");
        if (alphabet_.empty()) throw ValidationError("automaton alphabet must be nonempty");
        const std::size_t n = states_.size();
        if (matrices_.size() != alphabet_.size())
            throw ValidationError("need exactly one matrix per alphabet symbol");
        for (const auto& symbol : alphabet_) {
            auto it = matrices_.find(symbol);
            if (it == matrices_.end())
                throw ValidationError("missing matrix for symbol '" + symbol + "'");
            if (it->second.rows() != n || it->second.cols() != n)
                throw ValidationError("matrix for '" + symbol + "' has wrong shape");
            if (!is_stochastic(it->second))
                throw ValidationError("matrix for '" + symbol + "' is not stochastic");
        }
        if (initial_.size() != n || !validate_distribution(initial_))
            throw ValidationError("initial vector is not a distribution over the states");
        for (int q : accepting_)
            if (q < 0 || static_cast<std::size_t>(q) >= n)
                throw ValidationError("accepting set references unknown state");
    }

    const std::vector<std::string>& states() const { return states_; }
    const std::vector<std::string>& alphabet() const { return alphabet_; }
    const RowVector& initial() const { return initial_; }
    const std::set<int>& accepting() const { return accepting_; }

    std::size_t state_count() const { return states_.size(); }

    const Matrix& matrix(const std::string& symbol) const {
        auto it = matrices_.find(symbol);
        if (it == matrices_.end()) throw AlphabetError("unknown symbol '" + symbol + "'");
        return it->second;
    }

    bool has_symbol(const std::string& symbol) const { return matrices_.count(symbol) > 0; }

    int state_index(const std::string& name) const {
        auto it = std::find(states_.begin(), states_.end(), name);
        if (it == states_.end()) throw StateError("unknown state '" + name + "'");
        return static_cast<int>(it - states_.begin());
    }

    /// 0/1 indicator column of the accepting set.
    RowVector accepting_indicator() const {
        RowVector eta(states_.size(), Rational(0));
        for (int q : accepting_) eta[q] = Rational(1);
        return eta;
    }

private:
    std::vector<std::string> states_;
    std::vector<std::string> alphabet_;
    std::map<std::string, Matrix> matrices_;
    RowVector initial_;
    std::set<int> accepting_;
};

/// Cut point plus strictness, defining the language {w : P(w) > lambda} or
/// {w : P(w) >= lambda}.
struct CutPointSpec {
    Prob cutpoint;
    bool strict = true;
};

inline void require_word_in_alphabet(const Pfa& pfa, const Word& word) {
    for (const auto& symbol : word)
        if (!pfa.has_symbol(symbol)) throw AlphabetError("unknown symbol '" + symbol + "'");
}

/// Word acceptance probability: initial vector pushed through the per-symbol
/// matrices, then paired with the accepting indicator. Empty word allowed.
inline Prob acceptance_probability(const Pfa& pfa, const Word& word) {
    require_word_in_alphabet(pfa, word);
    RowVector v = pfa.initial();
    for (const auto& symbol : word) v = vec_mat_mul(v, pfa.matrix(symbol));
    return Prob(dot(v, pfa.accepting_indicator()));
}

inline bool language_membership(const Pfa& pfa, const Word& word, const CutPointSpec& spec) {
    const Prob p = acceptance_probability(pfa, word);
    return spec.strict ? p.value() > spec.cutpoint.value() : p.value() >= spec.cutpoint.value();
}

/// Length-lexicographic search (symbols in declaration order) for the first
/// word of length <= max_len inside the cut-point language. Absence of a
/// witness does not certify emptiness; the unbounded problem is undecidable.
inline std::optional<Word> bounded_emptiness_search(const Pfa& pfa, const CutPointSpec& spec,
                                                    std::size_t max_len) {
    const std::size_t k = pfa.alphabet().size();
    // Rightmost position is least significant, so each length is visited in
    // lexicographic order of the declared symbols.
    auto advance = [k](std::vector<std::size_t>& odometer) {
        std::size_t i = odometer.size();
        while (i > 0) {
            --i;
            if (++odometer[i] < k) return true;
            odometer[i] = 0;
        }
        return false;
    };
    for (std::size_t len = 0; len <= max_len; ++len) {
        std::vector<std::size_t> odometer(len, 0);
        do {
            Word word(len);
            for (std::size_t i = 0; i < len; ++i) word[i] = pfa.alphabet()[odometer[i]];
            if (language_membership(pfa, word, spec)) return word;
        } while (advance(odometer));
    }
    return std::nullopt;
}

}  // namespace pmc

#endif
