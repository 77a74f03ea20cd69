#include "hypdiv/fo.hpp"

#include <algorithm>
#include <optional>

namespace hypdiv::fo {

struct Formula::Node
{
    Kind kind;
    std::string first, second;
    std::optional<Formula> left, right;
};

Formula Formula::edge(std::string x, std::string y)
{
    return Formula(std::make_shared<const Node>(Node{Kind::Edge, std::move(x), std::move(y), std::nullopt, std::nullopt}));
}

Formula Formula::equal(std::string x, std::string y)
{
    return Formula(std::make_shared<const Node>(Node{Kind::Equal, std::move(x), std::move(y), std::nullopt, std::nullopt}));
}

Formula Formula::negation(Formula f)
{
    return Formula(std::make_shared<const Node>(Node{Kind::Not, {}, {}, std::move(f), std::nullopt}));
}

Formula Formula::conjunction(Formula a, Formula b)
{
    return Formula(std::make_shared<const Node>(Node{Kind::And, {}, {}, std::move(a), std::move(b)}));
}

Formula Formula::disjunction(Formula a, Formula b)
{
    return Formula(std::make_shared<const Node>(Node{Kind::Or, {}, {}, std::move(a), std::move(b)}));
}

Formula Formula::implication(Formula a, Formula b)
{
    return Formula(
        std::make_shared<const Node>(Node{Kind::Implies, {}, {}, std::move(a), std::move(b)}));
}

Formula Formula::exists(std::string var, Formula body)
{
    return Formula(std::make_shared<const Node>(Node{Kind::Exists, std::move(var), {}, std::move(body), std::nullopt}));
}

Formula Formula::forall(std::string var, Formula body)
{
    return Formula(std::make_shared<const Node>(Node{Kind::Forall, std::move(var), {}, std::move(body), std::nullopt}));
}

Kind Formula::kind() const { return node_->kind; }
const std::string & Formula::first() const { return node_->first; }
const std::string & Formula::second() const { return node_->second; }

const Formula & Formula::left() const
{
    if (!node_->left)
        throw ContractError("formula node has no left child");
    return *node_->left;
}

const Formula & Formula::right() const
{
    if (!node_->right)
        throw ContractError("formula node has no right child");
    return *node_->right;
}

bool operator==(const Formula & a, const Formula & b)
{
    if (a.node_ == b.node_)
        return true;
    if (a.kind() != b.kind() || a.first() != b.first() || a.second() != b.second())
        return false;
    if (static_cast<bool>(a.node_->left) != static_cast<bool>(b.node_->left) ||
        static_cast<bool>(a.node_->right) != static_cast<bool>(b.node_->right))
        return false;
    if (a.node_->left && !(a.left() == b.left()))
        return false;
    if (a.node_->right && !(a.right() == b.right()))
        return false;
    return true;
}

std::size_t node_count(const Formula & f)
{
    switch (f.kind()) {
    case Kind::Edge:
    case Kind::Equal: return 1;
    case Kind::Not:
    case Kind::Exists:
    case Kind::Forall: return 1 + node_count(f.left());
    default: return 1 + node_count(f.left()) + node_count(f.right());
    }
}

std::size_t quantifier_depth(const Formula & f)
{
    switch (f.kind()) {
    case Kind::Edge:
    case Kind::Equal: return 0;
    case Kind::Not: return quantifier_depth(f.left());
    case Kind::Exists:
    case Kind::Forall: return 1 + quantifier_depth(f.left());
    default: return std::max(quantifier_depth(f.left()), quantifier_depth(f.right()));
    }
}

namespace {
    void collect_free(const Formula & f, std::set<std::string> & bound, std::set<std::string> & out)
    {
        switch (f.kind()) {
        case Kind::Edge:
        case Kind::Equal:
            for (const auto * v : {&f.first(), &f.second()})
                if (!bound.contains(*v))
                    out.insert(*v);
            return;
        case Kind::Not: collect_free(f.left(), bound, out); return;
        case Kind::Exists:
        case Kind::Forall: {
            const bool fresh = bound.insert(f.first()).second;
            collect_free(f.left(), bound, out);
            if (fresh)
                bound.erase(f.first());
            return;
        }
        default:
            collect_free(f.left(), bound, out);
            collect_free(f.right(), bound, out);
        }
    }

    void collect_all(const Formula & f, std::set<std::string> & out)
    {
        if (f.is_atom()) {
            out.insert(f.first());
            out.insert(f.second());
            return;
        }
        if (f.is_quantifier())
            out.insert(f.first());
        collect_all(f.left(), out);
        if (f.kind() == Kind::And || f.kind() == Kind::Or || f.kind() == Kind::Implies)
            collect_all(f.right(), out);
    }
} // namespace

std::set<std::string> free_variables(const Formula & f)
{
    std::set<std::string> bound, out;
    collect_free(f, bound, out);
    return out;
}

std::set<std::string> all_variables(const Formula & f)
{
    std::set<std::string> out;
    collect_all(f, out);
    return out;
}

bool is_sentence(const Formula & f) { return free_variables(f).empty(); }

std::string to_string(const Formula & f)
{
    switch (f.kind()) {
    case Kind::Edge: return "E(" + f.first() + "," + f.second() + ")";
    case Kind::Equal: return f.first() + "=" + f.second();
    case Kind::Not:
        if (f.left().kind() == Kind::Equal)
            return "~(" + to_string(f.left()) + ")";
        return "~" + to_string(f.left());
    case Kind::And: return "(" + to_string(f.left()) + " & " + to_string(f.right()) + ")";
    case Kind::Or: return "(" + to_string(f.left()) + " | " + to_string(f.right()) + ")";
    case Kind::Implies: return "(" + to_string(f.left()) + " -> " + to_string(f.right()) + ")";
    case Kind::Exists: return "exists " + f.first() + ". " + to_string(f.left());
    case Kind::Forall: return "forall " + f.first() + ". " + to_string(f.left());
    }
    return {};
}

} // namespace hypdiv::fo
