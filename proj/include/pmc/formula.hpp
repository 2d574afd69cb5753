#ifndef PMC_FORMULA_HPP
#define PMC_FORMULA_HPP

#include <memory>
#include <string>
#include <utility>
#include <variant>

#include "pmc/rational.hpp"

namespace pmc {

struct StateFormula;
struct PathFormula;
using StateRef = std::shared_ptr<const StateFormula>;
using PathRef = std::shared_ptr<const PathFormula>;

enum class Cmp { greater, greater_eq };

inline const char* cmp_str(Cmp c) { return c == Cmp::greater ? ">" : ">="; }

/// State formulas: true | atom | !F | (F & F) | P{>,>=}r [ path ].
struct StateFormula {
    struct True {};
    struct Atom {
        std::string name;
    };
    struct Not {
        StateRef body;
    };
    struct And {
        StateRef lhs, rhs;
    };
    struct ProbOp {
        Cmp cmp;
        Prob bound;
        PathRef body;
    };

    std::variant<True, Atom, Not, And, ProbOp> node;
};

/// Path formulas. Next/Until over state formulas form the PCTL fragment;
/// the remaining constructors are the PCTL* extensions (a state formula
/// embedded as a path formula, and boolean/temporal operators over path
/// formulas).
struct PathFormula {
    struct Next {
        StateRef body;
    };
    struct Until {
        StateRef lhs, rhs;
    };
    struct Embed {
        StateRef body;
    };
    struct PNot {
        PathRef body;
    };
    struct PAnd {
        PathRef lhs, rhs;
    };
    struct PNext {
        PathRef body;
    };
    struct PUntil {
        PathRef lhs, rhs;
    };

    std::variant<Next, Until, Embed, PNot, PAnd, PNext, PUntil> node;
};

// --- constructors ---------------------------------------------------------

inline StateRef f_true() { return std::make_shared<StateFormula>(StateFormula{StateFormula::True{}}); }
inline StateRef f_atom(std::string name) {
    return std::make_shared<StateFormula>(StateFormula{StateFormula::Atom{std::move(name)}});
}
inline StateRef f_not(StateRef body) {
    return std::make_shared<StateFormula>(StateFormula{StateFormula::Not{std::move(body)}});
}
inline StateRef f_and(StateRef lhs, StateRef rhs) {
    return std::make_shared<StateFormula>(StateFormula{StateFormula::And{std::move(lhs), std::move(rhs)}});
}
inline StateRef f_prob(Cmp cmp, Prob bound, PathRef body) {
    return std::make_shared<StateFormula>(
        StateFormula{StateFormula::ProbOp{cmp, std::move(bound), std::move(body)}});
}

inline PathRef p_embed(StateRef body) {
    return std::make_shared<PathFormula>(PathFormula{PathFormula::Embed{std::move(body)}});
}
inline PathRef p_next(StateRef body) {
    return std::make_shared<PathFormula>(PathFormula{PathFormula::Next{std::move(body)}});
}
inline PathRef p_until(StateRef lhs, StateRef rhs) {
    return std::make_shared<PathFormula>(
        PathFormula{PathFormula::Until{std::move(lhs), std::move(rhs)}});
}

// Canonicalizing constructors: operators applied to embedded state formulas
// collapse to the PCTL node (or push the embedding outward), so every purely
// state-level subtree is represented one way only.
inline PathRef px_next(PathRef body) {
    if (auto* e = std::get_if<PathFormula::Embed>(&body->node)) return p_next(e->body);
    return std::make_shared<PathFormula>(PathFormula{PathFormula::PNext{std::move(body)}});
}
inline PathRef px_until(PathRef lhs, PathRef rhs) {
    auto* el = std::get_if<PathFormula::Embed>(&lhs->node);
    auto* er = std::get_if<PathFormula::Embed>(&rhs->node);
    if (el && er) return p_until(el->body, er->body);
    return std::make_shared<PathFormula>(
        PathFormula{PathFormula::PUntil{std::move(lhs), std::move(rhs)}});
}
inline PathRef px_and(PathRef lhs, PathRef rhs) {
    auto* el = std::get_if<PathFormula::Embed>(&lhs->node);
    auto* er = std::get_if<PathFormula::Embed>(&rhs->node);
    if (el && er) return p_embed(f_and(el->body, er->body));
    return std::make_shared<PathFormula>(
        PathFormula{PathFormula::PAnd{std::move(lhs), std::move(rhs)}});
}
inline PathRef px_not(PathRef body) {
    if (auto* e = std::get_if<PathFormula::Embed>(&body->node)) return p_embed(f_not(e->body));
    return std::make_shared<PathFormula>(PathFormula{PathFormula::PNot{std::move(body)}});
}

// --- PCTL fragment --------------------------------------------------------

inline bool is_pctl(const StateFormula& f);

/// A path formula is in the PCTL fragment iff it is Next or Until applied
/// directly to (PCTL) state formulas.
inline bool is_pctl(const PathFormula& f) {
    if (auto* n = std::get_if<PathFormula::Next>(&f.node)) return is_pctl(*n->body);
    if (auto* u = std::get_if<PathFormula::Until>(&f.node))
        return is_pctl(*u->lhs) && is_pctl(*u->rhs);
    return false;
}

inline bool is_pctl(const StateFormula& f) {
    struct Visitor {
        bool operator()(const StateFormula::True&) const { return true; }
        bool operator()(const StateFormula::Atom&) const { return true; }
        bool operator()(const StateFormula::Not& n) const { return is_pctl(*n.body); }
        bool operator()(const StateFormula::And& a) const {
            return is_pctl(*a.lhs) && is_pctl(*a.rhs);
        }
        bool operator()(const StateFormula::ProbOp& p) const { return is_pctl(*p.body); }
    };
    return std::visit(Visitor{}, f.node);
}

// --- structural equality --------------------------------------------------

inline bool equal(const StateFormula& a, const StateFormula& b);

inline bool equal(const PathFormula& a, const PathFormula& b) {
    if (a.node.index() != b.node.index()) return false;
    if (auto* x = std::get_if<PathFormula::Next>(&a.node))
        return equal(*x->body, *std::get<PathFormula::Next>(b.node).body);
    if (auto* x = std::get_if<PathFormula::Until>(&a.node)) {
        const auto& y = std::get<PathFormula::Until>(b.node);
        return equal(*x->lhs, *y.lhs) && equal(*x->rhs, *y.rhs);
    }
    if (auto* x = std::get_if<PathFormula::Embed>(&a.node))
        return equal(*x->body, *std::get<PathFormula::Embed>(b.node).body);
    if (auto* x = std::get_if<PathFormula::PNot>(&a.node))
        return equal(*x->body, *std::get<PathFormula::PNot>(b.node).body);
    if (auto* x = std::get_if<PathFormula::PAnd>(&a.node)) {
        const auto& y = std::get<PathFormula::PAnd>(b.node);
        return equal(*x->lhs, *y.lhs) && equal(*x->rhs, *y.rhs);
    }
    if (auto* x = std::get_if<PathFormula::PNext>(&a.node))
        return equal(*x->body, *std::get<PathFormula::PNext>(b.node).body);
    const auto& x = std::get<PathFormula::PUntil>(a.node);
    const auto& y = std::get<PathFormula::PUntil>(b.node);
    return equal(*x.lhs, *y.lhs) && equal(*x.rhs, *y.rhs);
}

inline bool equal(const StateFormula& a, const StateFormula& b) {
    if (a.node.index() != b.node.index()) return false;
    if (std::holds_alternative<StateFormula::True>(a.node)) return true;
    if (auto* x = std::get_if<StateFormula::Atom>(&a.node))
        return x->name == std::get<StateFormula::Atom>(b.node).name;
    if (auto* x = std::get_if<StateFormula::Not>(&a.node))
        return equal(*x->body, *std::get<StateFormula::Not>(b.node).body);
    if (auto* x = std::get_if<StateFormula::And>(&a.node)) {
        const auto& y = std::get<StateFormula::And>(b.node);
        return equal(*x->lhs, *y.lhs) && equal(*x->rhs, *y.rhs);
    }
    const auto& x = std::get<StateFormula::ProbOp>(a.node);
    const auto& y = std::get<StateFormula::ProbOp>(b.node);
    return x.cmp == y.cmp && x.bound == y.bound && equal(*x.body, *y.body);
}

// --- serialization --------------------------------------------------------

inline std::string serialize(const StateFormula& f);
inline std::string serialize(const PathFormula& f);

namespace detail {

// Until-typed operands of a PCTL* operator need parentheses; everything else
// is self-delimiting under the grammar.
inline std::string path_operand(const PathFormula& f) {
    if (std::holds_alternative<PathFormula::Until>(f.node) ||
        std::holds_alternative<PathFormula::PUntil>(f.node))
        return "(" + serialize(f) + ")";
    return serialize(f);
}

}  // namespace detail

inline std::string serialize(const StateFormula& f) {
    struct Visitor {
        std::string operator()(const StateFormula::True&) const { return "true"; }
        std::string operator()(const StateFormula::Atom& a) const { return a.name; }
        std::string operator()(const StateFormula::Not& n) const { return "!" + serialize(*n.body); }
        std::string operator()(const StateFormula::And& a) const {
            return "(" + serialize(*a.lhs) + " & " + serialize(*a.rhs) + ")";
        }
        std::string operator()(const StateFormula::ProbOp& p) const {
            return std::string("P") + cmp_str(p.cmp) + p.bound.str() + " [ " + serialize(*p.body) +
                   " ]";
        }
    };
    return std::visit(Visitor{}, f.node);
}

inline std::string serialize(const PathFormula& f) {
    struct Visitor {
        std::string operator()(const PathFormula::Next& n) const {
            return "X " + serialize(*n.body);
        }
        std::string operator()(const PathFormula::Until& u) const {
            return serialize(*u.lhs) + " U " + serialize(*u.rhs);
        }
        std::string operator()(const PathFormula::Embed& e) const { return serialize(*e.body); }
        std::string operator()(const PathFormula::PNot& n) const {
            return "!" + detail::path_operand(*n.body);
        }
        std::string operator()(const PathFormula::PAnd& a) const {
            return "(" + serialize(*a.lhs) + " & " + serialize(*a.rhs) + ")";
        }
        std::string operator()(const PathFormula::PNext& n) const {
            return "X " + detail::path_operand(*n.body);
        }
        std::string operator()(const PathFormula::PUntil& u) const {
            return detail::path_operand(*u.lhs) + " U " + serialize(*u.rhs);
        }
    };
    return std::visit(Visitor{}, f.node);
}

}  // namespace pmc

#endif
