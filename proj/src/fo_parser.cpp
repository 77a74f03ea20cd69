#include "hypdiv/fo.hpp"

#include <cctype>

namespace hypdiv::fo {

namespace {

    class Parser
    {
    public:
        explicit Parser(std::string_view text) : text_(text) {}

        Formula parse()
        {
            auto f = formula();
            skip_space();
            if (pos_ != text_.size())
                fail("unexpected trailing input");
            return f;
        }

    private:
        [[noreturn]] void fail(const std::string & what) const { throw SyntaxError(pos_, what); }

        void skip_space()
        {
            while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
        }

        bool peek(std::string_view token)
        {
            skip_space();
            return text_.substr(pos_, token.size()) == token;
        }

        bool accept(std::string_view token)
        {
            if (!peek(token))
                return false;
            pos_ += token.size();
            return true;
        }

        void expect(std::string_view token)
        {
            if (!accept(token))
                fail("expected '" + std::string(token) + "'");
        }

        bool keyword(std::string_view word)
        {
            skip_space();
            if (text_.substr(pos_, word.size()) != word)
                return false;
            const auto after = pos_ + word.size();
            if (after < text_.size() && std::isalnum(static_cast<unsigned char>(text_[after])))
                return false;
            pos_ = after;
            return true;
        }

        std::string variable()
        {
            skip_space();
            const auto start = pos_;
            if (pos_ >= text_.size() || !std::islower(static_cast<unsigned char>(text_[pos_])))
                fail("expected a variable [a-z][a-z0-9]*");
            ++pos_;
            while (pos_ < text_.size() && (std::islower(static_cast<unsigned char>(text_[pos_])) ||
                                           std::isdigit(static_cast<unsigned char>(text_[pos_]))))
                ++pos_;
            std::string name(text_.substr(start, pos_ - start));
            if (name == "exists" || name == "forall") {
                pos_ = start;
                fail("'" + name + "' is a keyword, not a variable");
            }
            return name;
        }

        Formula formula()
        {
            skip_space();
            if (pos_ >= text_.size())
                fail("unexpected end of input");

            if (keyword("exists") || keyword("forall")) {
                const bool universal = text_.substr(pos_ - 6, 6) == "forall";
                auto var = variable();
                expect(".");
                auto body = formula();
                return universal ? Formula::forall(std::move(var), std::move(body))
                                 : Formula::exists(std::move(var), std::move(body));
            }
            if (accept("~"))
                return Formula::negation(formula());
            if (accept("E(")) {
                auto x = variable();
                expect(",");
                auto y = variable();
                expect(")");
                return Formula::edge(std::move(x), std::move(y));
            }
            if (accept("("))
                return parenthesised();

            auto x = variable();
            expect("=");
            auto y = variable();
            return Formula::equal(std::move(x), std::move(y));
        }

        // after '(' : phi ')' | phi & phi ... ')' | phi | phi ... ')' | phi -> phi ')'
        Formula parenthesised()
        {
            auto lhs = formula();
            if (accept(")"))
                return lhs;
            if (accept("->")) {
                auto rhs = formula();
                expect(")");
                return Formula::implication(std::move(lhs), std::move(rhs));
            }
            for (const char op : {'&', '|'}) {
                const std::string_view token(&op, 1);
                if (!peek(token))
                    continue;
                while (accept(token)) {
                    auto rhs = formula();
                    lhs = op == '&' ? Formula::conjunction(std::move(lhs), std::move(rhs))
                                    : Formula::disjunction(std::move(lhs), std::move(rhs));
                }
                expect(")");
                return lhs;
            }
            fail("expected ')', '&', '|' or '->'");
        }

        std::string_view text_;
        std::size_t pos_ = 0;
    };

} // namespace

Formula parse_fo_formula(std::string_view text) { return Parser(text).parse(); }

Formula parse_fo(std::string_view text)
{
    auto f = parse_fo_formula(text);
    const auto free = free_variables(f);
    if (!free.empty())
        throw UnboundVariable("unbound variable '" + *free.begin() + "'");
    return f;
}

} // namespace hypdiv::fo
