#include "isodom/hunt.hpp"

#include <cctype>
#include <stdexcept>

namespace isodom {

namespace {

struct Token {
    enum class Kind { ident, number, plus, cmp_le, cmp_lt, cmp_eq, end };
    Kind kind;
    std::string text;
};

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            out.push_back({Token::Kind::number, std::string(text.substr(i, j - i))});
            i = j;
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
                ++j;
            out.push_back({Token::Kind::ident, std::string(text.substr(i, j - i))});
            i = j;
        } else if (c == '+') {
            out.push_back({Token::Kind::plus, "+"});
            ++i;
        } else if (c == '<') {
            if (i + 1 < text.size() && text[i + 1] == '=') {
                out.push_back({Token::Kind::cmp_le, "<="});
                i += 2;
            } else {
                out.push_back({Token::Kind::cmp_lt, "<"});
                ++i;
            }
        } else if (c == '=') {
            // accept both "=" and "=="
            if (i + 1 < text.size() && text[i + 1] == '=')
                i += 2;
            else
                ++i;
            out.push_back({Token::Kind::cmp_eq, "="});
        } else {
            throw std::invalid_argument("claim: unexpected character '" + std::string(1, c) +
                                        "' (grammar allows names, integers, +, <=, <, =)");
        }
    }
    out.push_back({Token::Kind::end, ""});
    return out;
}

}  // namespace

Claim Claim::parse(std::string_view text) {
    const std::vector<Token> tokens = tokenize(text);
    Claim claim;
    std::size_t pos = 0;

    auto parse_sum = [&](Sum& side) {
        for (;;) {
            const Token& t = tokens[pos];
            if (t.kind == Token::Kind::number) {
                side.atoms.push_back(Atom{true, std::stoll(t.text), {}});
            } else if (t.kind == Token::Kind::ident) {
                if (!is_report_field(t.text))
                    throw std::invalid_argument("claim: unknown parameter \"" + t.text + "\"");
                side.atoms.push_back(Atom{false, 0, t.text});
                claim.params_.push_back(t.text);
            } else {
                throw std::invalid_argument("claim: expected a parameter name or integer");
            }
            ++pos;
            if (tokens[pos].kind != Token::Kind::plus) break;
            ++pos;
        }
    };

    parse_sum(claim.lhs_);
    switch (tokens[pos].kind) {
        case Token::Kind::cmp_le: claim.cmp_ = Cmp::le; break;
        case Token::Kind::cmp_lt: claim.cmp_ = Cmp::lt; break;
        case Token::Kind::cmp_eq: claim.cmp_ = Cmp::eq; break;
        default:
            throw std::invalid_argument("claim: expected a comparison (<=, <, =)");
    }
    ++pos;
    parse_sum(claim.rhs_);
    if (tokens[pos].kind != Token::Kind::end)
        throw std::invalid_argument("claim: trailing input after the comparison");
    return claim;
}

std::optional<long long> Claim::evaluate(const Sum& side, const ParameterReport& r) const {
    long long total = 0;
    for (const Atom& a : side.atoms) {
        if (a.is_constant) {
            total += a.constant;
        } else {
            const auto v = report_value(r, a.name);
            if (!v) return std::nullopt;
            total += *v;
        }
    }
    return total;
}

std::optional<bool> Claim::holds(const ParameterReport& r) const {
    const auto lhs = evaluate(lhs_, r);
    const auto rhs = evaluate(rhs_, r);
    if (!lhs || !rhs) return std::nullopt;
    switch (cmp_) {
        case Cmp::le: return *lhs <= *rhs;
        case Cmp::lt: return *lhs < *rhs;
        case Cmp::eq: return *lhs == *rhs;
    }
    return std::nullopt;
}

std::string Claim::text() const {
    auto side_text = [](const Sum& side) {
        std::string out;
        for (std::size_t i = 0; i < side.atoms.size(); ++i) {
            if (i) out += " + ";
            const Atom& a = side.atoms[i];
            out += a.is_constant ? std::to_string(a.constant) : a.name;
        }
        return out;
    };
    const char* op = cmp_ == Cmp::le ? "<=" : (cmp_ == Cmp::lt ? "<" : "=");
    return side_text(lhs_) + " " + op + " " + side_text(rhs_);
}

HuntOutcome hunt_claim(const Claim& claim, const std::vector<Graph>& universe) {
    HuntOutcome out;
    for (std::size_t i = 0; i < universe.size(); ++i) {
        const ParameterReport r = compute_report(universe[i]);
        const auto verdict = claim.holds(r);
        if (!verdict) {
            ++out.skipped;
            continue;
        }
        ++out.scanned;
        if (!*verdict) {
            out.counterexample = i;
            return out;
        }
    }
    return out;
}

}  // namespace isodom
