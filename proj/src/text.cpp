#include "monocat/text.hpp"

#include <cctype>
#include <sstream>

namespace monocat {

namespace {

class Cursor {
public:
    Cursor(const std::string& text, FieldSpec field) : text_(text), field_(field) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            if (text_[pos_] == '\n') {
                ++line_;
                col_ = 1;
            } else {
                ++col_;
            }
            ++pos_;
        }
    }

    bool eof() {
        skip_ws();
        return pos_ >= text_.size();
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    char advance() {
        char c = text_[pos_++];
        ++col_;
        return c;
    }

    bool accept(char c) {
        if (peek() == c) {
            advance();
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    [[noreturn]] void fail(const std::string& msg) {
        raise(errc::parse_error,
              msg + " at line " + std::to_string(line_) + ", column " + std::to_string(col_));
    }

    std::string digits() {
        skip_ws();
        std::string out;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            out.push_back(advance());
        if (out.empty()) fail("expected an integer");
        return out;
    }

    const FieldSpec& field() const { return field_; }

private:
    const std::string& text_;
    FieldSpec field_;
    size_t pos_ = 0;
    size_t line_ = 1, col_ = 1;
};

long parse_exponent(Cursor& cur) {
    std::string d = cur.digits();
    if (d.size() > 5) cur.fail("exponent too large");
    return std::stol(d);
}

// coeff := int | int '/' int (rationals only)
Coeff parse_coeff(Cursor& cur) {
    std::string num = cur.digits();
    if (cur.peek() == '/') {
        if (cur.field().kind != FieldKind::rationals)
            cur.fail("fractional coefficients are only valid over the rationals");
        cur.advance();
        std::string den = cur.digits();
        if (den == "0") cur.fail("zero coefficient denominator");
        return cur.field().from_string(num + "/" + den);
    }
    return cur.field().from_string(num);
}

// term := coeff | coeff '*' 'x' ('^'? int)? | 'x' ('^' int)?
Poly parse_term(Cursor& cur) {
    const FieldSpec& field = cur.field();
    Coeff c = field.from_long(1);
    bool saw_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
        c = parse_coeff(cur);
        saw_coeff = true;
        if (!cur.accept('*')) return Poly::constant(field, c);
    }
    if (cur.peek() == 'x' || cur.peek() == 'X') {
        cur.advance();
        long e = 1;
        if (cur.accept('^')) {
            e = parse_exponent(cur);
        } else if (saw_coeff && std::isdigit(static_cast<unsigned char>(cur.peek()))) {
            e = parse_exponent(cur); // "2*x3" form: '^' optional after '*x'
        }
        return Poly::monomial(field, c, e);
    }
    if (saw_coeff) cur.fail("expected 'x' after '*'");
    cur.fail("expected a term");
}

// poly := ('-')? term (('+'|'-') term)*
Poly parse_poly_body(Cursor& cur) {
    const FieldSpec& field = cur.field();
    Poly acc = Poly::zero(field);
    bool negative = cur.accept('-');
    if (cur.peek() == '+') cur.fail("unexpected '+'");
    while (true) {
        Poly t = parse_term(cur);
        acc = negative ? acc - t : acc + t;
        if (cur.accept('+')) {
            negative = false;
        } else if (cur.accept('-')) {
            negative = true;
        } else {
            break;
        }
    }
    return acc;
}

// scalar := poly | '(' poly ')/(' poly ')'
LocalScalar parse_scalar_body(Cursor& cur) {
    if (cur.accept('(')) {
        Poly num = parse_poly_body(cur);
        cur.expect(')');
        cur.expect('/');
        cur.expect('(');
        Poly den = parse_poly_body(cur);
        cur.expect(')');
        return LocalScalar::of(num, den);
    }
    return LocalScalar::of(parse_poly_body(cur));
}

} // namespace

LocalScalar parse_scalar(const std::string& text, FieldSpec field) {
    Cursor cur(text, field);
    LocalScalar s = parse_scalar_body(cur);
    if (!cur.eof()) cur.fail("trailing input after scalar");
    return s;
}

LocalMatrix parse_matrix(const std::string& text, FieldSpec field) {
    Cursor cur(text, field);
    cur.expect('[');
    std::vector<std::vector<LocalScalar>> rows;
    if (!cur.accept(']')) {
        do {
            cur.expect('[');
            std::vector<LocalScalar> row;
            if (!cur.accept(']')) {
                do {
                    row.push_back(parse_scalar_body(cur));
                } while (cur.accept(','));
                cur.expect(']');
            }
            if (!rows.empty() && rows.front().size() != row.size()) cur.fail("ragged matrix rows");
            rows.push_back(std::move(row));
        } while (cur.accept(','));
        cur.expect(']');
    }
    if (!cur.eof()) cur.fail("trailing input after matrix");
    size_t r = rows.size();
    size_t c = r == 0 ? 0 : rows.front().size();
    LocalMatrix m(field, r, c);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    return m;
}

namespace {

bool coeff_negative(const FieldSpec& field, const Coeff& c) {
    return field.kind == FieldKind::rationals && sgn(c) < 0;
}

std::string term_text(const FieldSpec& field, const Coeff& c, long d) {
    Coeff a = c;
    if (coeff_negative(field, a)) a = -a;
    std::string cs = field.to_string(a);
    if (d == 0) return cs;
    std::string xs = d == 1 ? "x" : "x^" + std::to_string(d);
    if (cs == "1") return xs;
    return cs + "*" + xs;
}

} // namespace

std::string print_poly(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (long d = 0; d <= p.degree(); ++d) {
        Coeff c = p.coeff(d);
        if (coeff_is_zero(c)) continue;
        bool neg = coeff_negative(p.field(), c);
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? "-" : "+";
        }
        out += term_text(p.field(), c, d);
    }
    return out;
}

std::string print_scalar(const LocalScalar& s) {
    if (s.den().is_one()) return print_poly(s.num());
    return "(" + print_poly(s.num()) + ")/(" + print_poly(s.den()) + ")";
}

std::string print_matrix(const LocalMatrix& m) {
    if (m.rows() == 0) return "[]";
    std::string out = "[";
    for (size_t i = 0; i < m.rows(); ++i) {
        if (i) out += ",";
        out += "[";
        for (size_t j = 0; j < m.cols(); ++j) {
            if (j) out += ", ";
            out += print_scalar(m.at(i, j));
        }
        out += "]";
    }
    out += "]";
    return out;
}

} // namespace monocat
