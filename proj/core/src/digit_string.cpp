#include <algorithm>
#include <cctype>
#include <sstream>

#include "betarith/expansion.hpp"

namespace betarith {

namespace {

std::vector<int> minimal_period(const std::vector<int>& p) {
    const std::size_t n = p.size();
    for (std::size_t len = 1; len < n; ++len) {
        if (n % len != 0) continue;
        bool ok = true;
        for (std::size_t i = len; i < n && ok; ++i) ok = p[i] == p[i - len];
        if (ok) return std::vector<int>(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(len));
    }
    return p;
}

void join_digits(std::ostringstream& os, const std::vector<int>& ds, bool& first) {
    for (int d : ds) {
        if (!first) os << ' ';
        os << d;
        first = false;
    }
}

void compact_digits(std::ostringstream& os, const std::vector<int>& ds) {
    for (int d : ds) {
        if (d >= 10) {
            os << '(' << d << ')';
        } else {
            os << d;
        }
    }
}

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool done() {
        skip_space();
        return pos_ >= text_.size();
    }
    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    std::size_t pos() const { return pos_; }
    void advance(std::size_t n = 1) { pos_ += n; }
    bool consume(std::string_view tok) {
        skip_space();
        if (text_.substr(pos_, tok.size()) == tok) {
            pos_ += tok.size();
            return true;
        }
        return false;
    }
    int digit() {
        skip_space();
        const std::size_t start = pos_;
        long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            if (v > 1'000'000) throw ParseError("digit too large", start);
            ++pos_;
        }
        if (pos_ == start) throw ParseError("expected a digit", start);
        if (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) && text_[pos_] != ')' &&
            text_[pos_] != '.') {
            throw ParseError("unexpected character", pos_);
        }
        return static_cast<int>(v);
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

// digits* [ "(" digits+ ")^w" ]
void parse_tail(Lexer& lx, std::vector<int>& block, std::vector<int>& period) {
    while (!lx.done()) {
        char c = lx.peek();
        if (c == '(') {
            lx.advance();
            while (lx.peek() != ')') {
                if (lx.done()) throw ParseError("unterminated period", lx.pos());
                period.push_back(lx.digit());
            }
            const std::size_t at = lx.pos();
            if (!lx.consume(")^w") && !lx.consume(")^\xcf\x89")) throw ParseError("expected \")^w\"", at);
            if (period.empty()) throw ParseError("empty period", at);
            if (!lx.done()) throw ParseError("trailing input after period", lx.pos());
            return;
        }
        if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("unexpected character", lx.pos());
        block.push_back(lx.digit());
    }
}

}  // namespace

bool DigitString::is_zero() const {
    auto nz = [](const std::vector<int>& v) { return std::any_of(v.begin(), v.end(), [](int d) { return d != 0; }); };
    return !nz(int_digits) && !nz(frac_digits) && !nz(period);
}

void DigitString::canonicalize() {
    auto first_nz = std::find_if(int_digits.begin(), int_digits.end(), [](int d) { return d != 0; });
    int_digits.erase(int_digits.begin(), first_nz);
    if (!period.empty()) {
        if (std::all_of(period.begin(), period.end(), [](int d) { return d == 0; })) {
            period.clear();
        } else {
            period = minimal_period(period);
            while (!frac_digits.empty() && frac_digits.back() == period.back()) {
                std::rotate(period.rbegin(), period.rbegin() + 1, period.rend());
                frac_digits.pop_back();
            }
        }
    }
    if (period.empty()) {
        while (!frac_digits.empty() && frac_digits.back() == 0) frac_digits.pop_back();
    }
    if (is_zero()) negative = false;
}

DigitString DigitString::canonical() const {
    DigitString c = *this;
    c.canonicalize();
    return c;
}

std::string DigitString::to_string() const {
    std::ostringstream os;
    if (negative) os << "- ";
    bool first = true;
    if (int_digits.empty()) {
        os << '0';
        first = false;
    } else {
        join_digits(os, int_digits, first);
    }
    if (!frac_digits.empty() || !period.empty()) {
        os << " .";
        join_digits(os, frac_digits, first);
        if (!period.empty()) {
            os << " (";
            bool pf = true;
            join_digits(os, period, pf);
            os << ")^w";
        }
    }
    return os.str();
}

DigitString DigitString::parse(std::string_view text) {
    Lexer lx(text);
    DigitString d;
    if (lx.done()) throw ParseError("empty digit string", 0);
    if (lx.peek() == '-') {
        d.negative = true;
        lx.advance();
    }
    while (!lx.done() && lx.peek() != '.') {
        if (lx.peek() == '(') throw ParseError("period before the point", lx.pos());
        d.int_digits.push_back(lx.digit());
    }
    if (d.int_digits.empty()) throw ParseError("missing integer part", lx.pos());
    if (lx.consume(".")) {
        parse_tail(lx, d.frac_digits, d.period);
        if (d.frac_digits.empty() && d.period.empty()) throw ParseError("no digits after the point", lx.pos());
    }
    d.canonicalize();
    return d;
}

std::string format_sequence(const DigitString& seq) {
    std::ostringstream os;
    bool first = true;
    join_digits(os, seq.frac_digits, first);
    if (!seq.period.empty()) {
        if (!first) os << ' ';
        os << '(';
        bool pf = true;
        join_digits(os, seq.period, pf);
        os << ")^w";
    }
    return os.str();
}

DigitString parse_sequence(std::string_view text) {
    Lexer lx(text);
    DigitString d;
    parse_tail(lx, d.frac_digits, d.period);
    if (d.frac_digits.empty() && d.period.empty()) throw ParseError("empty sequence", 0);
    d.canonicalize();
    return d;
}

std::string format_compact(const DigitString& s) {
    std::ostringstream os;
    if (s.negative) os << '-';
    if (s.int_digits.empty()) {
        os << '0';
    } else {
        compact_digits(os, s.int_digits);
    }
    if (!s.frac_digits.empty() || !s.period.empty()) {
        os << "\xe2\x80\xa2";
        compact_digits(os, s.frac_digits);
        if (!s.period.empty()) {
            os << '[';
            compact_digits(os, s.period);
            os << "]^w";
        }
    }
    return os.str();
}

std::string to_string(GreedyStatus status) {
    switch (status) {
        case GreedyStatus::Finite: return "Finite";
        case GreedyStatus::EventuallyPeriodic: return "EventuallyPeriodic";
        case GreedyStatus::BudgetExceeded: return "BudgetExceeded";
    }
    return "?";
}

}  // namespace betarith
