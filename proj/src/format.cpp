#include "mzvfrac/format.hpp"

#include <cctype>
#include <set>
#include <sstream>

#include <json.hpp>

#include "mzvfrac/error.hpp"

namespace mzvfrac {

namespace {

// Hand-written scanner for `<comp> ; <items>` so that errors carry a position.
class LiteralScanner {
public:
    explicit LiteralScanner(std::string_view text) : text_(text) {}

    [[noreturn]] void fail(std::size_t pos, const std::string& what) const {
        throw ParseError(std::string(text_), pos, what);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool at_end() {
        skip_space();
        return pos_ >= text_.size();
    }

    bool consume(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::size_t pos() const { return pos_; }

    // Maximal run of characters other than whitespace, ',' and ';'.
    std::pair<std::string_view, std::size_t> token() {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && text_[pos_] != ',' && text_[pos_] != ';' &&
               !std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        if (start == pos_) fail(start, "expected a value");
        return {text_.substr(start, pos_ - start), start};
    }

    int positive_int() {
        auto [tok, at] = token();
        for (char c : tok) {
            if (!std::isdigit(static_cast<unsigned char>(c))) fail(at, "expected a positive integer");
        }
        if (tok.size() > 9) fail(at, "exponent too large");
        const int value = std::stoi(std::string(tok));
        if (value < 1) fail(at, "parts must be >= 1");
        return value;
    }

    std::vector<int> composition() {
        std::vector<int> parts{positive_int()};
        while (consume(',')) parts.push_back(positive_int());
        if (!consume(';')) fail(pos_, "expected ';' after the exponent list");
        return parts;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

mpq_class parse_rational(LiteralScanner& sc) {
    auto [tok, at] = sc.token();
    const auto slash = tok.find('/');
    auto digits_only = [](std::string_view s) {
        if (s.empty()) return false;
        for (char c : s) {
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        }
        return true;
    };
    const std::string_view num = tok.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : tok.substr(slash + 1);
    if (!digits_only(num) || !digits_only(den)) sc.fail(at, "expected a rational p or p/q");
    mpq_class q{mpz_class(std::string(num)), mpz_class(std::string(den))};
    if (q.get_den() == 0) sc.fail(at, "zero denominator");
    q.canonicalize();
    if (q <= 0) sc.fail(at, "rate must be positive");
    return q;
}

std::string latex_name(const std::string& name) {
    std::size_t cut = name.size();
    while (cut > 1 && std::isdigit(static_cast<unsigned char>(name[cut - 1]))) --cut;
    if (cut == name.size()) return name;
    return name.substr(0, cut) + "_{" + name.substr(cut) + "}";
}

nlohmann::json json_of(const LinComb<StarPair>& l) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [p, c] : l) {
        std::vector<std::string> names;
        for (const auto& v : p.variables()) names.push_back(v.name());
        terms.push_back({{"coef", c.get_str()}, {"s", p.exponents().parts()}, {"u", names}});
    }
    return {{"terms", terms}};
}

}  // namespace

StarPair parse_star_pair(std::string_view text) {
    LiteralScanner sc(text);
    std::vector<int> parts = sc.composition();
    std::vector<Variable> vars;
    std::set<std::string> seen;
    do {
        auto [tok, at] = sc.token();
        if (!Variable::is_valid_name(tok)) sc.fail(at, "invalid variable name");
        if (!seen.insert(std::string(tok)).second) sc.fail(at, "variable repeated");
        vars.emplace_back(tok);
    } while (sc.consume(','));
    if (!sc.at_end()) sc.fail(sc.pos(), "unexpected trailing input");
    if (vars.size() != parts.size()) sc.fail(sc.pos(), "exponent and variable lists differ in length");
    return StarPair(Composition(std::move(parts)), std::move(vars));
}

RatedComposition parse_rated_composition(std::string_view text) {
    LiteralScanner sc(text);
    std::vector<int> parts = sc.composition();
    std::vector<mpq_class> rates;
    do {
        rates.push_back(parse_rational(sc));
    } while (sc.consume(','));
    if (!sc.at_end()) sc.fail(sc.pos(), "unexpected trailing input");
    if (rates.size() != parts.size()) sc.fail(sc.pos(), "exponent and rate lists differ in length");
    return {Composition(std::move(parts)), std::move(rates)};
}

std::string to_literal(const StarPair& p) {
    std::string out;
    for (std::size_t i = 0; i < p.depth(); ++i) out += (i ? "," : "") + std::to_string(p.exponents()[i]);
    out += ';';
    for (std::size_t i = 0; i < p.depth(); ++i) out += (i ? "," : "") + p.variables()[i].name();
    return out;
}

std::string to_text(const LinComb<StarPair>& l) {
    if (l.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [p, c] : l) {
        const mpz_class mag = abs(c);
        if (first) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        first = false;
        if (mag != 1) out += mag.get_str() + "*";
        out += "<" + to_literal(p) + ">";
    }
    return out;
}

std::string to_latex(const LinComb<StarPair>& l) {
    if (l.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [p, c] : l) {
        const mpz_class mag = abs(c);
        if (first) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        first = false;
        std::string denom;
        for (std::size_t i = 0; i < p.depth(); ++i) {
            std::string base;
            const std::size_t tail = p.depth() - i;
            for (std::size_t j = i; j < p.depth(); ++j) {
                base += (j > i ? "+" : "") + latex_name(p.variables()[j].name());
            }
            if (tail > 1) base = "(" + base + ")";
            if (p.exponents()[i] != 1) base += "^{" + std::to_string(p.exponents()[i]) + "}";
            denom += base;
        }
        if (denom.empty()) denom = "1";
        out += "\\frac{" + mag.get_str() + "}{" + denom + "}";
    }
    return out;
}

std::string to_json(const LinComb<StarPair>& l) { return json_of(l).dump(); }

LinComb<StarPair> from_json(std::string_view text) {
    auto bad = [&](const std::string& what) -> ParseError { return ParseError(std::string(text), 0, what); };
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string(text), e.byte > 0 ? e.byte - 1 : 0, "malformed JSON");
    }
    if (!doc.is_object() || !doc.contains("terms") || !doc["terms"].is_array()) {
        throw bad("expected an object with a \"terms\" array");
    }
    LinComb<StarPair> out;
    try {
        for (const auto& t : doc["terms"]) {
            mpz_class coef(t.at("coef").get<std::string>());
            std::vector<Variable> vars;
            for (const auto& name : t.at("u")) vars.emplace_back(name.get<std::string>());
            out.add(StarPair(Composition(t.at("s").get<std::vector<int>>()), std::move(vars)), coef);
        }
    } catch (const nlohmann::json::exception& e) {
        throw bad(std::string("bad term: ") + e.what());
    } catch (const std::invalid_argument&) {
        throw bad("coefficient is not a decimal integer");
    } catch (const Error& e) {
        throw bad(e.what());
    }
    return out;
}

std::string render(const LinComb<StarPair>& l, OutputFormat fmt) {
    switch (fmt) {
        case OutputFormat::Text: return to_text(l);
        case OutputFormat::Latex: return to_latex(l);
        case OutputFormat::Json: return to_json(l);
    }
    return {};
}

std::string to_text(const Word& w) {
    if (w.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ' ';
        out += w[i].is_x0() ? std::string("x0") : "x_" + w[i].variable().name();
    }
    return out;
}

std::string to_text(const LinComb<Word>& l) {
    if (l.empty()) return "0";
    std::string out;
    for (const auto& [w, c] : l) {
        if (!out.empty()) out += " + ";
        out += c.get_str() + "*[" + to_text(w) + "]";
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const StarPair& p) { return os << "<" << to_literal(p) << ">"; }
std::ostream& operator<<(std::ostream& os, const Word& w) { return os << "[" << to_text(w) << "]"; }
std::ostream& operator<<(std::ostream& os, const LinComb<StarPair>& l) { return os << to_text(l); }
std::ostream& operator<<(std::ostream& os, const LinComb<Word>& l) { return os << to_text(l); }

}  // namespace mzvfrac
