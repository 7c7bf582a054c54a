#include "mzv/expression.hpp"

#include <cctype>
#include <vector>

namespace mzv {

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error(message + " at position " + std::to_string(position)), position_(position) {}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    MultiIndex index() {
        skip_space();
        if (text_.substr(pos_, 3) == "phi") {
            pos_ += 3;
            return MultiIndex::phi();
        }
        expect('(');
        std::vector<int> parts;
        parts.push_back(positive_int());
        while (peek() == ',') {
            ++pos_;
            parts.push_back(positive_int());
        }
        expect(')');
        return MultiIndex(std::move(parts));
    }

    IndexCombination combination() {
        skip_space();
        IndexCombination out;
        if (peek() == '0' && rest_is_blank(pos_ + 1)) {
            pos_ = text_.size();
            return out;
        }
        bool negative = false;
        if (peek() == '-') {
            negative = true;
            ++pos_;
        } else if (peek() == '+') {
            ++pos_;
        }
        term(out, negative);
        while (true) {
            skip_space();
            if (pos_ >= text_.size()) break;
            const char c = text_[pos_];
            if (c != '+' && c != '-') fail("expected '+' or '-'");
            ++pos_;
            term(out, c == '-');
        }
        return out;
    }

    void finish() {
        skip_space();
        if (pos_ != text_.size()) fail("unexpected trailing input");
    }

private:
    void term(IndexCombination& out, bool negative) {
        skip_space();
        Rational coefficient(1);
        if (peek() == '-') {
            negative = !negative;
            ++pos_;
            skip_space();
        }
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coefficient = rational();
            skip_space();
            if (peek() == '*') ++pos_;
            else fail("expected '*' between coefficient and index");
        }
        const MultiIndex mu = index();
        out.add(mu, negative ? Rational(-coefficient) : coefficient);
    }

    Rational rational() {
        const std::size_t start = pos_;
        std::string digits = unsigned_digits();
        if (peek() == '/') {
            ++pos_;
            const std::size_t den_pos = pos_;
            std::string den = unsigned_digits();
            mpz_class d(den);
            if (d == 0) throw ParseError("zero denominator", den_pos);
            Rational q(mpz_class(digits), d);
            q.canonicalize();
            return q;
        }
        if (digits.empty()) throw ParseError("expected number", start);
        return Rational(mpz_class(digits));
    }

    std::string unsigned_digits() {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected digits");
        return std::string(text_.substr(start, pos_ - start));
    }

    int positive_int() {
        skip_space();
        const std::size_t start = pos_;
        const std::string digits = unsigned_digits();
        if (digits.size() > 9) throw ParseError("index part too large", start);
        const int value = std::stoi(digits);
        if (value < 1) throw ParseError("index parts must be positive", start);
        return value;
    }

    void expect(char c) {
        skip_space();
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool rest_is_blank(std::size_t from) const {
        for (std::size_t i = from; i < text_.size(); ++i)
            if (!std::isspace(static_cast<unsigned char>(text_[i]))) return false;
        return true;
    }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

MultiIndex parse_index(std::string_view text) {
    Parser p(text);
    MultiIndex mu = p.index();
    p.finish();
    return mu;
}

IndexCombination parse_combination(std::string_view text) {
    Parser p(text);
    IndexCombination v = p.combination();
    p.finish();
    return v;
}

}  // namespace mzv
