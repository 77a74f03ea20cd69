#include "hypdiv/fo.hpp"
#include "hypdiv/reductions.hpp"

namespace hypdiv::fo {

namespace {

    class FreshNames
    {
    public:
        explicit FreshNames(std::set<std::string> taken) : taken_(std::move(taken)) {}

        std::string next(const std::string & stem)
        {
            for (;;) {
                auto name = stem + std::to_string(counter_++);
                if (taken_.insert(name).second)
                    return name;
            }
        }

    private:
        std::set<std::string> taken_;
        std::size_t counter_ = 0;
    };

    // Renames every bound variable to a fresh name and applies `renaming` to
    // the free ones. Bound names are fresh, so no capture occurs.
    Formula instantiate(const Formula & f, const std::map<std::string, std::string> & renaming, FreshNames & fresh)
    {
        auto name = [&](const std::string & v) {
            auto it = renaming.find(v);
            return it != renaming.end() ? it->second : v;
        };
        switch (f.kind()) {
        case Kind::Edge: return Formula::edge(name(f.first()), name(f.second()));
        case Kind::Equal: return Formula::equal(name(f.first()), name(f.second()));
        case Kind::Not: return Formula::negation(instantiate(f.left(), renaming, fresh));
        case Kind::And: {
            auto a = instantiate(f.left(), renaming, fresh);
            return Formula::conjunction(std::move(a), instantiate(f.right(), renaming, fresh));
        }
        case Kind::Or: {
            auto a = instantiate(f.left(), renaming, fresh);
            return Formula::disjunction(std::move(a), instantiate(f.right(), renaming, fresh));
        }
        case Kind::Implies: {
            auto a = instantiate(f.left(), renaming, fresh);
            return Formula::implication(std::move(a), instantiate(f.right(), renaming, fresh));
        }
        case Kind::Exists:
        case Kind::Forall: {
            auto inner = renaming;
            const auto bound = fresh.next("c");
            inner[f.first()] = bound;
            auto body = instantiate(f.left(), inner, fresh);
            return f.kind() == Kind::Exists ? Formula::exists(bound, std::move(body))
                                            : Formula::forall(bound, std::move(body));
        }
        }
        throw ContractError("unreachable formula kind");
    }

    class Rewriter
    {
    public:
        Rewriter(const Formula & phi, const Formula & classifier) :
            classifier_(classifier), fresh_(taken(phi, classifier))
        {
            const auto free = free_variables(classifier);
            if (free.size() != 1)
                throw ContractError("classifier must have exactly one free variable, has " +
                                    std::to_string(free.size()));
            classifier_var_ = *free.begin();
        }

        Formula rewrite(const Formula & f)
        {
            switch (f.kind()) {
            case Kind::Edge: {
                const auto s = fresh_.next("s");
                return Formula::exists(
                    s, Formula::conjunction(Formula::conjunction(Formula::edge(f.first(), s), Formula::edge(s, f.second())),
                                            Formula::negation(Formula::equal(f.first(), f.second()))));
            }
            case Kind::Equal: return f;
            case Kind::Not: return Formula::negation(rewrite(f.left()));
            case Kind::And: {
                auto a = rewrite(f.left());
                return Formula::conjunction(std::move(a), rewrite(f.right()));
            }
            case Kind::Or: {
                auto a = rewrite(f.left());
                return Formula::disjunction(std::move(a), rewrite(f.right()));
            }
            case Kind::Implies: {
                auto a = rewrite(f.left());
                return Formula::implication(std::move(a), rewrite(f.right()));
            }
            case Kind::Exists: {
                auto guard = classify(f.first());
                return Formula::exists(f.first(), Formula::conjunction(std::move(guard), rewrite(f.left())));
            }
            case Kind::Forall: {
                auto guard = classify(f.first());
                return Formula::forall(f.first(), Formula::implication(std::move(guard), rewrite(f.left())));
            }
            }
            throw ContractError("unreachable formula kind");
        }

    private:
        static std::set<std::string> taken(const Formula & phi, const Formula & classifier)
        {
            auto out = all_variables(phi);
            out.merge(all_variables(classifier));
            return out;
        }

        Formula classify(const std::string & var)
        {
            return instantiate(classifier_, {{classifier_var_, var}}, fresh_);
        }

        const Formula & classifier_;
        FreshNames fresh_;
        std::string classifier_var_;
    };

} // namespace

Formula phi_v()
{
    return Formula::forall(
        "y", Formula::implication(Formula::edge("x", "y"),
                                  Formula::exists("z", Formula::conjunction(Formula::negation(Formula::equal("z", "x")),
                                                                            Formula::edge("y", "z")))));
}

Formula rewrite_fo(const Formula & phi, const Formula & classifier)
{
    if (!is_sentence(phi))
        throw ContractError("rewrite_fo: only sentences are rewritten");
    return Rewriter(phi, classifier).rewrite(phi);
}

Formula rewrite_fo(const Formula & phi) { return rewrite_fo(phi, phi_v()); }

std::vector<EmbeddingRecord> run_embedding_harness(const std::vector<Graph> & hosts,
                                                   const std::vector<Formula> & sentences,
                                                   const Formula & classifier)
{
    const auto free = free_variables(classifier);
    if (free.size() != 1)
        throw ContractError("classifier must have exactly one free variable");
    const auto var = *free.begin();

    std::vector<Formula> rewritten;
    rewritten.reserve(sentences.size());
    for (const auto & phi : sentences)
        rewritten.push_back(rewrite_fo(phi, classifier));

    std::vector<EmbeddingRecord> out;
    for (std::size_t gi = 0; gi < hosts.size(); ++gi) {
        const auto & h = hosts[gi];
        const auto g = distance_graph(embed_subdivided(h), 1);

        std::size_t misclassified = 0;
        for (std::size_t v = 1; v <= g.n(); ++v)
            if (eval_fo(g, classifier, {{var, v}}) != (v <= h.n()))
                ++misclassified;

        for (std::size_t si = 0; si < sentences.size(); ++si) {
            EmbeddingRecord rec;
            rec.graph_index = gi;
            rec.sentence_index = si;
            rec.host_value = eval_fo(h, sentences[si]);
            rec.embedded_value = eval_fo(g, rewritten[si]);
            rec.agree = rec.host_value == rec.embedded_value;
            rec.original_size = node_count(sentences[si]);
            rec.rewritten_size = node_count(rewritten[si]);
            rec.misclassified = misclassified;
            out.push_back(rec);
        }
    }
    return out;
}

} // namespace hypdiv::fo
