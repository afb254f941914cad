#include "rblie/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace rblie {

GaussRat GaussRat::inv() const {
    if (is_zero()) throw std::domain_error("GaussRat: division by zero");
    // 1/(a+bi) = (a-bi)/(a^2+b^2)
    mpq_class n = re_ * re_ + im_ * im_;
    return GaussRat(re_ / n, -im_ / n);
}

GaussRat& GaussRat::operator*=(const GaussRat& o) {
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

namespace {

std::string rat_str(const mpq_class& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

struct Cursor {
    const std::string& s;
    size_t pos = 0;

    bool done() const { return pos >= s.size(); }
    char peek() const { return done() ? '\0' : s[pos]; }

    [[noreturn]] void fail(const std::string& why) const {
        throw std::invalid_argument("bad scalar '" + s + "': " + why);
    }

    // sign is applied by the caller; reads digits[/digits]
    mpq_class rational() {
        size_t start = pos;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) pos++;
        if (pos == start) fail("expected digits");
        std::string num = s.substr(start, pos - start);
        std::string den = "1";
        if (peek() == '/') {
            pos++;
            size_t dstart = pos;
            while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) pos++;
            if (pos == dstart) fail("expected denominator digits");
            den = s.substr(dstart, pos - dstart);
        }
        mpq_class q(num + "/" + den);
        if (q.get_den() == 0) fail("zero denominator");
        q.canonicalize();
        return q;
    }
};

}  // namespace

GaussRat GaussRat::parse(const std::string& text) {
    size_t first = text.find_first_not_of(" \t");
    size_t last = text.find_last_not_of(" \t");
    std::string trimmed = (first == std::string::npos) ? "" : text.substr(first, last - first + 1);
    Cursor c{trimmed};
    if (c.done()) c.fail("empty");

    mpq_class re = 0, im = 0;
    bool have_im = false;

    for (int part = 0; part < 2; part++) {
        int sign = 1;
        if (c.peek() == '+' || c.peek() == '-') {
            if (part == 0 && c.peek() == '+') c.fail("leading '+'");
            sign = (c.peek() == '-') ? -1 : 1;
            c.pos++;
        } else if (part == 1) {
            break;  // single-part form
        }
        if (have_im) c.fail("imaginary part must come last");

        if (c.peek() == 'i') {
            c.pos++;
            im = sign;
            have_im = true;
            continue;
        }
        mpq_class q = c.rational();
        if (c.peek() == '*') {
            c.pos++;
            if (c.peek() != 'i') c.fail("expected 'i' after '*'");
            c.pos++;
            im = sign * q;
            have_im = true;
        } else {
            if (part == 1) c.fail("second part must be imaginary");
            re = sign * q;
        }
        if (c.done()) break;
    }
    if (!c.done()) c.fail("trailing characters");
    return GaussRat(re, im);
}

std::string GaussRat::str() const {
    if (is_zero()) return "0";
    std::string out;
    if (sgn(re_) != 0) out += rat_str(re_);
    if (sgn(im_) != 0) {
        mpq_class a = abs(im_);
        if (!out.empty() && sgn(im_) > 0) out += "+";
        if (sgn(im_) < 0) out += "-";
        if (a == 1)
            out += "i";
        else
            out += rat_str(a) + "*i";
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const GaussRat& q) { return os << q.str(); }

}  // namespace rblie
