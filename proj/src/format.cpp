#include "highwater/format.hpp"

#include <cctype>
#include <sstream>

#include "highwater/derived.hpp"

namespace highwater {

std::string format_element(const Element& x) {
    if (x.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : x.terms()) {
        bool neg = c.prints_negative();
        Scalar mag = neg ? -c : c;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        if (!mag.is_one()) os << mag.to_string() << "*";
        os << k.to_string();
        first = false;
    }
    return os.str();
}

namespace {

class Parser {
public:
    Parser(const Field& F, const std::string& text) : F_(F), t_(text) {}

    ParseResult run() {
        Element out(F_);
        skip();
        if (pos_ == t_.size()) fail("empty element");
        bool first = true;
        while (pos_ < t_.size()) {
            int sign = 1;
            if (t_[pos_] == '+' || t_[pos_] == '-') {
                sign = t_[pos_] == '-' ? -1 : 1;
                ++pos_;
                skip();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            Element term = parse_term();
            out += Scalar(F_, sign) * term;
            first = false;
            skip();
        }
        return {out, warnings_};
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("cannot parse element '" + t_ + "' at position " + std::to_string(pos_) + ": " + msg);
    }
    void skip() {
        while (pos_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[pos_]))) ++pos_;
    }
    bool peek_digit() const { return pos_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[pos_])); }

    std::string digits() {
        std::size_t start = pos_;
        while (peek_digit()) ++pos_;
        if (start == pos_) fail("expected a number");
        return t_.substr(start, pos_ - start);
    }

    long integer() {
        skip();
        bool neg = false;
        if (pos_ < t_.size() && (t_[pos_] == '-' || t_[pos_] == '+')) {
            neg = t_[pos_] == '-';
            ++pos_;
            skip();
        }
        std::string d = digits();
        if (d.size() > 15) fail("index too large");
        long v = std::stol(d);
        skip();
        return neg ? -v : v;
    }

    void expect(char c) {
        skip();
        if (pos_ >= t_.size() || t_[pos_] != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    Element parse_term() {
        skip();
        if (pos_ < t_.size() && (t_[pos_] == '-' || t_[pos_] == '+')) {
            bool neg = t_[pos_] == '-';
            ++pos_;
            Element inner = parse_term();
            return neg ? -inner : inner;
        }
        if (peek_digit()) {
            std::string lit = digits();
            skip();
            if (pos_ < t_.size() && t_[pos_] == '/') {
                ++pos_;
                skip();
                lit += "/" + digits();
                skip();
            }
            Scalar c = Scalar::parse(F_, lit);
            if (pos_ < t_.size() && t_[pos_] == '*') {
                ++pos_;
                skip();
                return c * parse_atom();
            }
            if (c.is_zero()) return Element(F_);
            fail("a bare scalar is not an element");
        }
        return parse_atom();
    }

    Element parse_atom() {
        std::size_t start = pos_;
        while (pos_ < t_.size() && std::isalpha(static_cast<unsigned char>(t_[pos_]))) ++pos_;
        std::string name = t_.substr(start, pos_ - start);
        if (name.empty()) fail("expected a basis symbol");
        expect('(');
        long i = integer(), j = 0;
        bool two = false;
        skip();
        if (pos_ < t_.size() && t_[pos_] == ',') {
            ++pos_;
            j = integer();
            two = true;
        }
        expect(')');
        auto need = [&](bool want_two) {
            if (two != want_two) fail(name + " takes " + (want_two ? "two arguments" : "one argument"));
        };
        auto nonneg = [&](long v) {
            if (v < 0) fail(name + " index must be non-negative");
        };
        std::string text = t_.substr(start, pos_ - start);
        if (name == "a") {
            need(false);
            return a(F_, i);
        }
        if (name == "s") {
            need(false);
            nonneg(i);
            if (i == 0) warnings_.push_back(text + " is zero");
            return s(F_, i);
        }
        if (name == "p" || name == "z") {
            need(true);
            nonneg(j);
            if (j % 3 != 0 || j == 0) warnings_.push_back(text + " is zero: level " + std::to_string(j) + " is not in 3N");
            return name == "p" ? p(F_, i, j) : z(F_, i, j);
        }
        need(false);
        nonneg(i);
        if (name == "u") return u_vec(F_, i);
        if (name == "v") return v_vec(F_, i);
        if (name == "w") return w_vec(F_, i);
        if (name == "wt") return wt_vec(F_, i);
        if (name == "c") return c_vec(F_, i);
        fail("unknown symbol '" + name + "'");
    }

    const Field& F_;
    std::string t_;
    std::size_t pos_ = 0;
    std::vector<std::string> warnings_;
};

}  // namespace

ParseResult parse_element(const Field& F, const std::string& text) { return Parser(F, text).run(); }

std::vector<Element> parse_element_list(const Field& F, const std::string& text, std::vector<std::string>* warnings) {
    std::vector<Element> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';')) {
        if (item.find_first_not_of(" \t") == std::string::npos) continue;
        auto r = parse_element(F, item);
        if (warnings) warnings->insert(warnings->end(), r.warnings.begin(), r.warnings.end());
        out.push_back(std::move(r.value));
    }
    if (out.empty()) throw ParseError("empty element list");
    return out;
}

nlohmann::json key_to_json(const BasisKey& k) {
    switch (k.kind) {
        case KeyKind::A: return {{"kind", "a"}, {"index", k.index}};
        case KeyKind::S: return {{"kind", "s"}, {"index", k.index}};
        case KeyKind::P: return {{"kind", "p"}, {"residue", k.residue}, {"index", k.index}};
    }
    return {};
}

BasisKey key_from_json(const nlohmann::json& j) {
    std::string kind = j.at("kind").get<std::string>();
    long idx = j.at("index").get<long>();
    if (kind == "a") return BasisKey::a(idx);
    if (kind == "s") return BasisKey::s(idx);
    if (kind == "p") return BasisKey::p(j.at("residue").get<int>(), idx);
    throw ParseError("unknown key kind '" + kind + "'");
}

nlohmann::json element_to_json(const Element& x) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [k, c] : x.terms()) terms.push_back({{"key", key_to_json(k)}, {"coeff", c.to_string()}});
    return {{"field", x.field().characteristic()}, {"terms", terms}};
}

Element element_from_json(const nlohmann::json& j) {
    Field F = Field::make(j.at("field").get<std::uint64_t>());
    Element x(F);
    for (const auto& t : j.at("terms")) x.add(key_from_json(t.at("key")), Scalar::parse(F, t.at("coeff").get<std::string>()));
    return x;
}

}  // namespace highwater
