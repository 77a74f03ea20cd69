#include "hypdiv/fo.hpp"

namespace hypdiv::fo {

namespace {

    // Formula compiled to index-addressed nodes with variables resolved to slots.
    struct Compiled
    {
        struct Op
        {
            Kind kind;
            std::size_t a = 0, b = 0;  // atoms: slots; otherwise child op indices
            std::size_t slot = 0;      // quantifiers: bound slot
        };
        std::vector<Op> ops;
        std::map<std::string, std::size_t> slots;

        std::size_t slot_of(const std::string & name)
        {
            return slots.try_emplace(name, slots.size()).first->second;
        }

        // Each binding occurrence gets its own slot, so shadowing is handled by scope.
        std::size_t compile(const Formula & f, std::map<std::string, std::size_t> & scope)
        {
            Op op{f.kind()};
            auto lookup = [&](const std::string & v) {
                auto it = scope.find(v);
                return it != scope.end() ? it->second : slot_of(v);
            };
            switch (f.kind()) {
            case Kind::Edge:
            case Kind::Equal:
                op.a = lookup(f.first());
                op.b = lookup(f.second());
                break;
            case Kind::Not: op.a = compile(f.left(), scope); break;
            case Kind::Exists:
            case Kind::Forall: {
                op.slot = slots.size() + fresh_++;
                auto inner = scope;
                inner[f.first()] = op.slot;
                op.a = compile(f.left(), inner);
                break;
            }
            default:
                op.a = compile(f.left(), scope);
                op.b = compile(f.right(), scope);
            }
            ops.push_back(op);
            return ops.size() - 1;
        }

        std::size_t fresh_ = 0;
    };

    class Evaluator
    {
    public:
        Evaluator(const Graph & g, const Compiled & c, std::vector<std::size_t> values) :
            n_(g.n()), c_(c), values_(std::move(values)), adjacency_(n_ * n_, 0)
        {
            for (auto [u, v] : g.edges())
                adjacency_[(u - 1) * n_ + (v - 1)] = adjacency_[(v - 1) * n_ + (u - 1)] = 1;
        }

        bool eval(std::size_t i)
        {
            const auto & op = c_.ops[i];
            switch (op.kind) {
            case Kind::Edge: return adjacency_[values_[op.a] * n_ + values_[op.b]] != 0;
            case Kind::Equal: return values_[op.a] == values_[op.b];
            case Kind::Not: return !eval(op.a);
            case Kind::And: return eval(op.a) && eval(op.b);
            case Kind::Or: return eval(op.a) || eval(op.b);
            case Kind::Implies: return !eval(op.a) || eval(op.b);
            case Kind::Exists:
                for (std::size_t x = 0; x < n_; ++x) {
                    values_[op.slot] = x;
                    if (eval(op.a))
                        return true;
                }
                return false;
            case Kind::Forall:
                for (std::size_t x = 0; x < n_; ++x) {
                    values_[op.slot] = x;
                    if (!eval(op.a))
                        return false;
                }
                return true;
            }
            return false;
        }

    private:
        std::size_t n_;
        const Compiled & c_;
        std::vector<std::size_t> values_;
        std::vector<char> adjacency_;
    };

} // namespace

bool eval_fo(const Graph & g, const Formula & phi, const std::map<std::string, std::size_t> & assignment)
{
    Compiled c;
    for (const auto & [name, vertex] : assignment) {
        if (vertex < 1 || vertex > g.n())
            throw ContractError("assignment of '" + name + "' is outside 1.." + std::to_string(g.n()));
        c.slot_of(name);
    }
    for (const auto & v : free_variables(phi))
        if (!assignment.contains(v))
            throw ContractError("free variable '" + v + "' has no assignment");

    const auto free_slots = c.slots.size();
    std::map<std::string, std::size_t> scope;
    const auto root = c.compile(phi, scope);

    std::vector<std::size_t> values(free_slots + c.fresh_, 0);
    for (const auto & [name, vertex] : assignment)
        values[c.slots.at(name)] = vertex - 1;
    return Evaluator(g, c, std::move(values)).eval(root);
}

bool eval_fo(const Graph & g, const Formula & phi)
{
    if (!is_sentence(phi))
        throw ContractError("eval_fo: formula has free variables");
    return eval_fo(g, phi, {});
}

} // namespace hypdiv::fo
