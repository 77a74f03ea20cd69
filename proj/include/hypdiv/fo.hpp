#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "hypdiv/error.hpp"
#include "hypdiv/graph.hpp"

namespace hypdiv::fo {

enum class Kind { Edge, Equal, Not, And, Or, Implies, Exists, Forall };

/// Immutable first-order formula over the edge relation E. Subtrees are
/// shared between copies.
class Formula
{
public:
    static Formula edge(std::string x, std::string y);
    static Formula equal(std::string x, std::string y);
    static Formula negation(Formula f);
    static Formula conjunction(Formula a, Formula b);
    static Formula disjunction(Formula a, Formula b);
    static Formula implication(Formula a, Formula b);
    static Formula exists(std::string var, Formula body);
    static Formula forall(std::string var, Formula body);

    Kind kind() const;

    /// Atoms: the two variables. Quantifiers: `first()` is the bound variable.
    const std::string & first() const;
    const std::string & second() const;

    /// Not / quantifiers: `left()` is the only child.
    const Formula & left() const;
    const Formula & right() const;

    bool is_atom() const { return kind() == Kind::Edge || kind() == Kind::Equal; }
    bool is_quantifier() const { return kind() == Kind::Exists || kind() == Kind::Forall; }

    friend bool operator==(const Formula & a, const Formula & b);

private:
    struct Node;
    explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

/// Syntax error at a 0-based character offset.
struct SyntaxError : Error
{
    SyntaxError(std::size_t position, const std::string & what) :
        Error("position " + std::to_string(position) + ": " + what), position(position)
    {
    }
    std::size_t position;
};

/// A variable occurs free where a sentence was required.
struct UnboundVariable : Error
{
    using Error::Error;
};

/// Parses a sentence; throws SyntaxError or UnboundVariable.
///
///   phi ::= E(x,y) | x=y | ~phi | (phi) | (phi & phi [& phi...])
///         | (phi | phi [| phi...]) | (phi -> phi) | exists x. phi | forall x. phi
Formula parse_fo(std::string_view text);

/// Same grammar, free variables allowed.
Formula parse_fo_formula(std::string_view text);

std::string to_string(const Formula & f);

/// |Φ|: number of AST nodes (atoms, connectives and quantifiers count one each).
std::size_t node_count(const Formula & f);
std::size_t quantifier_depth(const Formula & f);
std::set<std::string> free_variables(const Formula & f);
std::set<std::string> all_variables(const Formula & f);
bool is_sentence(const Formula & f);

/// G ⊨ phi for a sentence, E symmetric and irreflexive. Naive evaluation.
/// Throws ContractError if phi has free variables.
bool eval_fo(const Graph & g, const Formula & phi);

/// Evaluation under an assignment of the free variables to vertices 1..n.
bool eval_fo(const Graph & g, const Formula & phi, const std::map<std::string, std::size_t> & assignment);

/// The default vertex classifier, free variable `x`:
///   ∀y (E(x,y) → ∃z (¬(z=x) ∧ E(y,z)))
Formula phi_v();

/// Relativises every quantifier of `phi` to `classifier` and replaces each
/// E(x,y) by ∃s ((E(x,s) ∧ E(s,y)) ∧ ¬(x=y)) with s fresh. The classifier
/// must have exactly one free variable; its bound variables are renamed
/// apart before instantiation. Throws ContractError otherwise, or if phi
/// is not a sentence.
Formula rewrite_fo(const Formula & phi, const Formula & classifier);
Formula rewrite_fo(const Formula & phi);

/// One (H, Φ) cell of the embed-and-rewrite comparison.
struct EmbeddingRecord
{
    std::size_t graph_index = 0;
    std::size_t sentence_index = 0;
    bool host_value = false;      ///< H ⊨ Φ
    bool embedded_value = false;  ///< G ⊨ Φ', G the distance-1 graph of the embedding of H
    bool agree = false;
    std::size_t original_size = 0;
    std::size_t rewritten_size = 0;
    std::size_t misclassified = 0;  ///< vertices of G where the classifier disagrees with "is an original vertex"
};

std::vector<EmbeddingRecord> run_embedding_harness(const std::vector<Graph> & hosts,
                                                   const std::vector<Formula> & sentences,
                                                   const Formula & classifier);

} // namespace hypdiv::fo
