#include "lt/error.hpp"
#include "lt/syntax.hpp"

#include <cctype>
#include <limits>
#include <optional>

namespace lt {

namespace {

std::string join_expected(const std::vector<std::string> &expected) {
    std::string out;
    for (const auto &e : expected) {
        if (!out.empty())
            out += ", ";
        out += e;
    }
    return out;
}

} // namespace

syntax_error::syntax_error(std::size_t offset, std::vector<std::string> expected, const std::string &found)
    : error("syntax error at offset " + std::to_string(offset) + ": found " + found + ", expected one of: " +
            join_expected(expected)),
      offset_(offset), expected_(std::move(expected)) {}

namespace {

enum class tok { word, op, lparen, rparen, colon, equals, end };

struct token {
    tok kind;
    std::string text;
    std::size_t offset;
};

std::string describe(const token &t) {
    if (t.kind == tok::end)
        return "end of input";
    return "'" + t.text + "'";
}

bool is_word_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::vector<token> tokenize(std::string_view text) {
    std::vector<token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        auto next = i + 1 < text.size() ? text[i + 1] : '\0';
        if (c == 'i' && (next == '!' || next == '&' || next == '|')) {
            out.push_back({tok::op, std::string(text.substr(i, 2)), i});
            i += 2;
        } else if (c == 'o' && next == '*') {
            out.push_back({tok::op, "o*", i});
            i += 2;
        } else if (c == '-' && next == '>') {
            out.push_back({tok::op, "->", i});
            i += 2;
        } else if (c == '!' || c == '~' || c == '&' || c == '|') {
            out.push_back({tok::op, std::string(1, c), i});
            ++i;
        } else if (c == '(') {
            out.push_back({tok::lparen, "(", i++});
        } else if (c == ')') {
            out.push_back({tok::rparen, ")", i++});
        } else if (c == ':') {
            out.push_back({tok::colon, ":", i++});
        } else if (c == '=') {
            out.push_back({tok::equals, "=", i++});
        } else if (is_word_char(c)) {
            std::size_t start = i;
            while (i < text.size() && is_word_char(text[i]))
                ++i;
            out.push_back({tok::word, std::string(text.substr(start, i - start)), start});
        } else {
            throw syntax_error(i, {"a formula or label token"}, "'" + std::string(1, c) + "'");
        }
    }
    out.push_back({tok::end, "", text.size()});
    return out;
}

/// Parses `<prefix><digits>`; nullopt when the word has another shape.
std::optional<std::uint32_t> indexed_word(const token &t, char prefix) {
    const auto &w = t.text;
    if (w.size() < 2 || w[0] != prefix)
        return std::nullopt;
    std::uint64_t value = 0;
    for (std::size_t i = 1; i < w.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(w[i])))
            return std::nullopt;
        value = value * 10 + static_cast<std::uint64_t>(w[i] - '0');
        if (value > std::numeric_limits<std::uint32_t>::max())
            throw syntax_error(t.offset, {"an index below 2^32"}, describe(t));
    }
    return static_cast<std::uint32_t>(value);
}

const std::vector<std::string> &formula_starts() {
    static const std::vector<std::string> s = {"bot",  "ibot", "top", "itop", "nb", "P<digits>", "(",
                                               "!",    "i!",   "~",   "box",  "dia", "down",     "up"};
    return s;
}

const std::vector<std::string> &label_starts() {
    static const std::vector<std::string> s = {"F", "p<digits>", "!", "("};
    return s;
}

class parser {
public:
    explicit parser(std::string_view text) : toks_(tokenize(text)) {}

    Formula formula() { return implication(); }

    Label label() { return label_or(); }

    LabelledFormula labelled() {
        Label a = label();
        if (peek().kind == tok::colon) {
            advance();
            return {std::move(a), formula()};
        }
        if (peek().kind == tok::equals) {
            advance();
            Label b = label();
            return label_equality(a, b);
        }
        fail({"&", "|", ":", "="});
    }

    void expect_end(std::vector<std::string> continuations) {
        if (peek().kind == tok::end)
            return;
        if (depth_ > 0)
            continuations.push_back(")");
        continuations.push_back("end of input");
        fail(std::move(continuations));
    }

private:
    const token &peek() const { return toks_[pos_]; }
    const token &advance() { return toks_[pos_++]; }
    bool at_op(std::string_view op) const { return peek().kind == tok::op && peek().text == op; }

    [[noreturn]] void fail(std::vector<std::string> expected) const {
        throw syntax_error(peek().offset, std::move(expected), describe(peek()));
    }

    Formula implication() {
        Formula lhs = disjunction();
        if (at_op("->")) {
            advance();
            return Formula::implies(std::move(lhs), implication());
        }
        return lhs;
    }

    // Left-associative level whose operators may not be mixed without parentheses.
    template <class Next, class Build>
    Formula level(std::initializer_list<std::string_view> ops, Next next, Build build) {
        Formula lhs = next();
        std::optional<std::string> chosen;
        for (;;) {
            if (peek().kind != tok::op)
                return lhs;
            std::string op = peek().text;
            bool here = false;
            for (auto o : ops)
                here = here || o == op;
            if (!here)
                return lhs;
            if (chosen && *chosen != op)
                fail({*chosen, "parentheses around the mixed operand"});
            chosen = op;
            advance();
            lhs = build(op, std::move(lhs), next());
        }
    }

    Formula disjunction() {
        return level(
            {"|", "i|", "o*"}, [this] { return conjunction(); },
            [](const std::string &op, Formula l, Formula r) {
                if (op == "|")
                    return Formula::ext_or(std::move(l), std::move(r));
                if (op == "i|")
                    return Formula::int_or(std::move(l), std::move(r));
                return Formula::circle_star(std::move(l), std::move(r));
            });
    }

    Formula conjunction() {
        return level(
            {"&", "i&"}, [this] { return unary(); },
            [](const std::string &op, Formula l, Formula r) {
                if (op == "&")
                    return Formula::ext_and(std::move(l), std::move(r));
                return Formula::int_and(std::move(l), std::move(r));
            });
    }

    Formula unary() {
        const token &t = peek();
        if (t.kind == tok::op) {
            if (t.text == "!") {
                advance();
                return Formula::ext_not(unary());
            }
            if (t.text == "i!") {
                advance();
                return Formula::int_not(unary());
            }
            if (t.text == "~") {
                advance();
                return Formula::strict_not(unary());
            }
        }
        if (t.kind == tok::word) {
            if (t.text == "box") {
                advance();
                return Formula::box(unary());
            }
            if (t.text == "dia") {
                advance();
                return Formula::diamond(unary());
            }
            if (t.text == "down") {
                advance();
                return Formula::down(unary());
            }
            if (t.text == "up") {
                advance();
                return Formula::up(unary());
            }
        }
        return primary();
    }

    Formula primary() {
        const token &t = peek();
        if (t.kind == tok::lparen) {
            advance();
            ++depth_;
            Formula inner = implication();
            if (peek().kind != tok::rparen)
                fail({"&", "i&", "|", "i|", "o*", "->", ")"});
            advance();
            --depth_;
            return inner;
        }
        if (t.kind == tok::word) {
            if (t.text == "bot") {
                advance();
                return Formula::ext_bot();
            }
            if (t.text == "ibot") {
                advance();
                return Formula::int_bot();
            }
            if (t.text == "top") {
                advance();
                return Formula::ext_top();
            }
            if (t.text == "itop") {
                advance();
                return Formula::int_top();
            }
            if (t.text == "nb") {
                advance();
                return Formula::nb();
            }
            if (auto idx = indexed_word(t, 'P')) {
                advance();
                return Formula::var(*idx);
            }
        }
        fail(formula_starts());
    }

    Label label_or() {
        Label lhs = label_and();
        while (at_op("|")) {
            advance();
            lhs = Label::lor(std::move(lhs), label_and());
        }
        return lhs;
    }

    Label label_and() {
        Label lhs = label_unary();
        while (at_op("&")) {
            advance();
            lhs = Label::land(std::move(lhs), label_unary());
        }
        return lhs;
    }

    Label label_unary() {
        const token &t = peek();
        if (at_op("!")) {
            advance();
            return Label::neg(label_unary());
        }
        if (t.kind == tok::lparen) {
            advance();
            ++depth_;
            Label inner = label_or();
            if (peek().kind != tok::rparen)
                fail({"&", "|", ")"});
            advance();
            --depth_;
            return inner;
        }
        if (t.kind == tok::word) {
            if (t.text == "F") {
                advance();
                return Label::bot();
            }
            if (auto idx = indexed_word(t, 'p')) {
                advance();
                return Label::atom(*idx);
            }
        }
        fail(label_starts());
    }

    std::vector<token> toks_;
    std::size_t pos_ = 0;
    int depth_ = 0;
};

} // namespace

Formula parse_formula(std::string_view text) {
    parser p(text);
    Formula f = p.formula();
    p.expect_end({"&", "i&", "|", "i|", "o*", "->"});
    return f;
}

Label parse_label(std::string_view text) {
    parser p(text);
    Label a = p.label();
    p.expect_end({"&", "|"});
    return a;
}

LabelledFormula parse_labelled(std::string_view text) {
    parser p(text);
    LabelledFormula lf = p.labelled();
    p.expect_end({"&", "i&", "|", "i|", "o*", "->"});
    return lf;
}

} // namespace lt
