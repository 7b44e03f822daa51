#include "deriv/parser.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace deriv {

namespace {

struct Token {
    enum Kind { Number, Ident, Plus, Minus, Star, Caret, LParen, RParen, End } kind;
    std::string text;
    int line;
    int col;
};

class Lexer {
public:
    Lexer(const std::string& text, int line) : text_(text), line_(line) {}

    Token next() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        int col = static_cast<int>(pos_) + 1;
        if (pos_ >= text_.size()) return {Token::End, "", line_, col};
        char c = text_[pos_];
        switch (c) {
            case '+': ++pos_; return {Token::Plus, "+", line_, col};
            case '-': ++pos_; return {Token::Minus, "-", line_, col};
            case '*': ++pos_; return {Token::Star, "*", line_, col};
            case '^': ++pos_; return {Token::Caret, "^", line_, col};
            case '(': ++pos_; return {Token::LParen, "(", line_, col};
            case ')': ++pos_; return {Token::RParen, ")", line_, col};
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            // Rational literal "3/2".
            size_t save = pos_;
            size_t probe = pos_;
            while (probe < text_.size() && std::isspace(static_cast<unsigned char>(text_[probe])))
                ++probe;
            if (probe < text_.size() && text_[probe] == '/') {
                ++probe;
                while (probe < text_.size() && std::isspace(static_cast<unsigned char>(text_[probe])))
                    ++probe;
                size_t dstart = probe;
                while (probe < text_.size() && std::isdigit(static_cast<unsigned char>(text_[probe])))
                    ++probe;
                if (probe == dstart)
                    throw ParseError("expected denominator digits after '/'", line_,
                                     static_cast<int>(dstart) + 1);
                pos_ = probe;
                return {Token::Number,
                        text_.substr(start, save - start) + "/" + text_.substr(dstart, probe - dstart),
                        line_, col};
            }
            return {Token::Number, text_.substr(start, pos_ - start), line_, col};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            return {Token::Ident, text_.substr(start, pos_ - start), line_, col};
        }
        throw ParseError(std::string("unexpected character '") + c + "'", line_, col);
    }

private:
    const std::string& text_;
    size_t pos_ = 0;
    int line_;
};

class ExprParser {
public:
    ExprParser(const std::string& text, RingContextPtr ctx, int line)
        : lexer_(text, line), ctx_(std::move(ctx)) {
        cur_ = lexer_.next();
    }

    MultiPoly parse() {
        MultiPoly p = expr();
        if (cur_.kind != Token::End)
            throw ParseError("unexpected trailing input '" + cur_.text + "'", cur_.line, cur_.col);
        return p;
    }

private:
    void bump() { cur_ = lexer_.next(); }

    MultiPoly expr() {
        bool negate = false;
        if (cur_.kind == Token::Minus) {
            negate = true;
            bump();
        }
        MultiPoly acc = term();
        if (negate) acc = -acc;
        while (cur_.kind == Token::Plus || cur_.kind == Token::Minus) {
            bool minus = cur_.kind == Token::Minus;
            bump();
            MultiPoly t = term();
            if (minus) acc -= t;
            else acc += t;
        }
        return acc;
    }

    MultiPoly term() {
        MultiPoly acc = factor();
        while (cur_.kind == Token::Star) {
            bump();
            acc = acc * factor();
        }
        return acc;
    }

    MultiPoly factor() {
        MultiPoly base = primary();
        if (cur_.kind == Token::Caret) {
            bump();
            if (cur_.kind != Token::Number || cur_.text.find('/') != std::string::npos)
                throw ParseError("exponent must be a non-negative integer", cur_.line, cur_.col);
            int e = std::stoi(cur_.text);
            bump();
            return base.pow(e);
        }
        return base;
    }

    MultiPoly primary() {
        switch (cur_.kind) {
            case Token::Number: {
                auto q = rational_from_string(cur_.text);
                if (!q) throw ParseError("bad numeric literal '" + cur_.text + "'", cur_.line, cur_.col);
                bump();
                return MultiPoly::constant(ctx_, *q);
            }
            case Token::Ident: {
                auto v = ctx_->find(cur_.text);
                if (!v)
                    throw ParseError("undeclared variable '" + cur_.text + "'", cur_.line, cur_.col);
                bump();
                return MultiPoly::var(ctx_, *v);
            }
            case Token::LParen: {
                bump();
                MultiPoly p = expr();
                if (cur_.kind != Token::RParen)
                    throw ParseError("expected ')'", cur_.line, cur_.col);
                bump();
                return p;
            }
            case Token::Minus: {
                bump();
                return -factor();
            }
            default:
                throw ParseError("expected a number, variable, or '('", cur_.line, cur_.col);
        }
    }

    Lexer lexer_;
    RingContextPtr ctx_;
    Token cur_;
};

std::vector<std::pair<int, std::string>> nonblank_lines(const std::string& text) {
    std::vector<std::pair<int, std::string>> out;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        if (line[a] == '#') continue;
        out.emplace_back(lineno, line);
    }
    return out;
}

// "head(VAR) = expr" for head in {d, rho, rhoinv}; returns (head, var, expr).
struct ImageLine {
    std::string head;
    std::string var;
    std::string expr;
    int lineno;
    int expr_col;
};

ImageLine split_image_line(const std::string& line, int lineno) {
    size_t i = 0;
    auto skip_ws = [&] { while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i; };
    skip_ws();
    size_t hstart = i;
    while (i < line.size() && std::isalpha(static_cast<unsigned char>(line[i]))) ++i;
    std::string head = line.substr(hstart, i - hstart);
    if (head.empty()) throw ParseError("expected an image line like 'd(Y) = ...'", lineno, static_cast<int>(i) + 1);
    skip_ws();
    if (i >= line.size() || line[i] != '(')
        throw ParseError("expected '(' after '" + head + "'", lineno, static_cast<int>(i) + 1);
    ++i;
    skip_ws();
    size_t vstart = i;
    while (i < line.size() &&
           (std::isalnum(static_cast<unsigned char>(line[i])) || line[i] == '_'))
        ++i;
    std::string var = line.substr(vstart, i - vstart);
    if (var.empty()) throw ParseError("expected a variable name", lineno, static_cast<int>(i) + 1);
    skip_ws();
    if (i >= line.size() || line[i] != ')')
        throw ParseError("expected ')'", lineno, static_cast<int>(i) + 1);
    ++i;
    skip_ws();
    if (i >= line.size() || line[i] != '=')
        throw ParseError("expected '='", lineno, static_cast<int>(i) + 1);
    ++i;
    return {head, var, line.substr(i), lineno, static_cast<int>(i) + 1};
}

RingContextPtr parse_vars_line(const std::string& line, int lineno) {
    size_t p = line.find("vars:");
    if (p == std::string::npos || line.find_first_not_of(" \t") != p)
        throw ParseError("file must start with a 'vars:' line", lineno, 1);
    std::string rest = line.substr(p + 5);
    std::vector<std::string> names;
    std::istringstream in(rest);
    std::string item;
    while (std::getline(in, item, ',')) {
        size_t a = item.find_first_not_of(" \t\r");
        size_t b = item.find_last_not_of(" \t\r");
        if (a == std::string::npos)
            throw ParseError("empty variable name in vars list", lineno, 1);
        names.push_back(item.substr(a, b - a + 1));
    }
    if (names.empty()) throw ParseError("vars line declares no variables", lineno, 1);
    if (names[0] != "X")
        throw ParseError("the first declared variable must be X", lineno, 1);
    try {
        return make_context(std::move(names));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), lineno, 1);
    }
}

}  // namespace

MultiPoly parse_expression(const std::string& text, const RingContextPtr& ctx, int line_offset) {
    return ExprParser(text, ctx, line_offset).parse();
}

UniPoly parse_unipoly_expression(const std::string& text) {
    static const RingContextPtr x_only = make_context({"X"});
    MultiPoly p = parse_expression(text, x_only);
    return *p.to_unipoly();
}

Derivation parse_derivation(const std::string& text) {
    auto lines = nonblank_lines(text);
    if (lines.empty()) throw ParseError("empty input", 1, 1);
    RingContextPtr ctx = parse_vars_line(lines[0].second, lines[0].first);

    std::vector<std::optional<MultiPoly>> images(static_cast<size_t>(ctx->size()));
    for (size_t li = 1; li < lines.size(); ++li) {
        ImageLine img = split_image_line(lines[li].second, lines[li].first);
        if (img.head != "d")
            throw ParseError("expected 'd(...)' image line, got '" + img.head + "'", img.lineno, 1);
        auto v = ctx->find(img.var);
        if (!v) throw ParseError("undeclared variable '" + img.var + "'", img.lineno, 1);
        if (images[static_cast<size_t>(*v)])
            throw ParseError("duplicate image for variable '" + img.var + "'", img.lineno, 1);
        images[static_cast<size_t>(*v)] = parse_expression(img.expr, ctx, img.lineno);
    }
    std::vector<MultiPoly> final_images;
    for (int v = 0; v < ctx->size(); ++v) {
        if (!images[static_cast<size_t>(v)])
            throw ParseError("missing image line for variable '" + ctx->name(v) + "'",
                             lines.back().first, 1);
        final_images.push_back(std::move(*images[static_cast<size_t>(v)]));
    }
    return Derivation(ctx, std::move(final_images));
}

Automorphism parse_automorphism(const std::string& text, const RingContextPtr& ctx,
                                bool derive_affine_inverse) {
    auto lines = nonblank_lines(text);
    std::vector<std::optional<MultiPoly>> fwd(static_cast<size_t>(ctx->size()));
    std::vector<std::optional<MultiPoly>> inv(static_cast<size_t>(ctx->size()));
    size_t start = 0;
    if (!lines.empty() && lines[0].second.find("vars:") != std::string::npos) {
        RingContextPtr declared = parse_vars_line(lines[0].second, lines[0].first);
        if (!same_context(declared, ctx))
            throw ParseError("automorphism vars do not match the derivation's ring",
                             lines[0].first, 1);
        start = 1;
    }
    for (size_t li = start; li < lines.size(); ++li) {
        ImageLine img = split_image_line(lines[li].second, lines[li].first);
        auto v = ctx->find(img.var);
        if (!v) throw ParseError("undeclared variable '" + img.var + "'", img.lineno, 1);
        auto& slot = img.head == "rho"      ? fwd
                     : img.head == "rhoinv" ? inv
                                            : throw ParseError("expected 'rho' or 'rhoinv' image line",
                                                               img.lineno, 1);
        if (slot[static_cast<size_t>(*v)])
            throw ParseError("duplicate image for variable '" + img.var + "'", img.lineno, 1);
        slot[static_cast<size_t>(*v)] = parse_expression(img.expr, ctx, img.lineno);
    }

    std::vector<MultiPoly> forward;
    for (int v = 0; v < ctx->size(); ++v) {
        if (!fwd[static_cast<size_t>(v)])
            throw ParseError("missing rho image for variable '" + ctx->name(v) + "'", 1, 1);
        forward.push_back(std::move(*fwd[static_cast<size_t>(v)]));
    }

    bool have_inverse = true;
    for (int v = 0; v < ctx->size(); ++v)
        if (!inv[static_cast<size_t>(v)]) have_inverse = false;

    if (have_inverse) {
        std::vector<MultiPoly> inverse;
        for (int v = 0; v < ctx->size(); ++v)
            inverse.push_back(std::move(*inv[static_cast<size_t>(v)]));
        try {
            return Automorphism(ctx, std::move(forward), std::move(inverse));
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what(), 1, 1);
        }
    }

    if (!derive_affine_inverse)
        throw ParseError("rhoinv lines required (or use the affine constructor)", 1, 1);

    // Derive the inverse for affine substitutions.
    const int m = ctx->size() - 1;
    MultiPoly xi = forward[0] - MultiPoly::var(ctx, 0);
    if (!xi.is_constant())
        throw ParseError("affine automorphism requires rho(X) = X + alpha", 1, 1);
    Rational alpha = xi.constant_value();
    std::vector<std::vector<Rational>> c(static_cast<size_t>(m),
                                         std::vector<Rational>(static_cast<size_t>(m)));
    std::vector<UniPoly> e;
    for (int i = 1; i <= m; ++i) {
        MultiPoly rest = forward[static_cast<size_t>(i)];
        for (int j = 1; j <= m; ++j) {
            MultiPoly cj = rest.coeff_in(j, 1);
            if (!cj.is_constant())
                throw ParseError("affine automorphism requires constant Y-coefficients", 1, 1);
            c[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] = cj.constant_value();
            rest -= cj * MultiPoly::var(ctx, j);
        }
        auto tail = rest.to_unipoly();
        if (!tail) throw ParseError("affine automorphism image is not affine in the Y-variables", 1, 1);
        e.push_back(std::move(*tail));
    }
    auto rho = Automorphism::affine(ctx, alpha, c, e);
    if (!rho) throw ParseError("affine substitution has a singular coefficient matrix", 1, 1);
    return *rho;
}

}  // namespace deriv
