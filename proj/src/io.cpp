#include "tropnull/io.hpp"

#include "tropnull/error.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>

namespace tropnull::io {

using nlohmann::json;

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

// [begin, end) spans of whitespace-separated tokens.
std::vector<std::pair<std::size_t, std::size_t>> tokens(std::string_view s, std::size_t from, std::size_t to) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    std::size_t i = from;
    while (i < to) {
        while (i < to && is_space(s[i])) ++i;
        if (i == to) break;
        std::size_t j = i;
        while (j < to && !is_space(s[j])) ++j;
        out.emplace_back(i, j);
        i = j;
    }
    return out;
}

Rational rational_at(std::string_view tok, std::size_t line, std::size_t col) {
    try {
        return parse_rational(tok);
    } catch (const Error& e) {
        throw SyntaxError(line, col, "malformed rational '" + std::string(tok) + "'");
    }
}

std::optional<Flavor> flavor_named(std::string_view s) {
    if (s == "poly") return Flavor::Poly;
    if (s == "laurent") return Flavor::Laurent;
    if (s == "pl") return Flavor::Plq;
    return std::nullopt;
}

struct Header {
    std::size_t n;
    Flavor flavor;
    Semiring semiring;
};

Header parse_header(std::string_view line, std::size_t line_no) {
    std::optional<long> n;
    std::optional<Flavor> flavor;
    std::optional<Semiring> semiring;
    for (auto [b, e] : tokens(line, 0, line.size())) {
        const std::string_view tok = line.substr(b, e - b);
        const auto eq = tok.find('=');
        if (eq == std::string_view::npos) throw SyntaxError(line_no, b + 1, "expected key=value in header");
        const std::string_view key = tok.substr(0, eq);
        const std::string_view val = tok.substr(eq + 1);
        const std::size_t vcol = b + eq + 2;
        if (key == "n") {
            Rational q = rational_at(val, line_no, vcol);
            if (!is_integer(q) || sgn(q) <= 0) throw SyntaxError(line_no, vcol, "n must be a positive integer");
            n = q.get_num().get_si();
        } else if (key == "flavor") {
            flavor = flavor_named(val);
            if (!flavor) throw SyntaxError(line_no, vcol, "flavor must be poly, laurent or pl");
        } else if (key == "semiring") {
            if (val == "R") semiring = Semiring::R;
            else if (val == "T") semiring = Semiring::T;
            else throw SyntaxError(line_no, vcol, "semiring must be R or T");
        } else {
            throw SyntaxError(line_no, b + 1, "unknown header key '" + std::string(key) + "'");
        }
    }
    if (!n || !flavor || !semiring) throw SyntaxError(line_no, 1, "header needs n=, flavor= and semiring=");
    return Header{static_cast<std::size_t>(*n), *flavor, *semiring};
}

Term parse_term(std::string_view line, std::size_t from, std::size_t to, std::size_t line_no, std::size_t n) {
    while (from < to && is_space(line[from])) ++from;
    while (to > from && is_space(line[to - 1])) --to;
    if (from == to) throw SyntaxError(line_no, from + 1, "empty term");
    const std::string_view text = line.substr(from, to - from);
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) throw SyntaxError(line_no, from + 1, "term needs coef:exponents");
    std::string_view coef = text.substr(0, colon);
    Tag tag = Tag::Real;
    if (!coef.empty() && coef.back() == 'v') {
        tag = Tag::Nu;
        coef.remove_suffix(1);
    }
    Term t{{}, ExtScalar{rational_at(coef, line_no, from + 1), tag}};
    for (auto [b, e] : tokens(line, from + colon + 1, to)) {
        t.exponent.push_back(rational_at(line.substr(b, e - b), line_no, b + 1));
    }
    if (t.exponent.size() != n) {
        throw SyntaxError(line_no, from + 1,
                          "term has " + std::to_string(t.exponent.size()) + " exponents, expected " + std::to_string(n));
    }
    return t;
}

void append_term(std::string& out, const Term& t) {
    out += to_string(t.coefficient.value);
    if (t.coefficient.is_nu()) out += 'v';
    out += ':';
    for (std::size_t j = 0; j < t.exponent.size(); ++j) out += (j ? " " : "") + to_string(t.exponent[j]);
}

std::string function_line(const std::string& name, const TropFunction& f) {
    std::string out = name + ": ";
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) out += " ; ";
        append_term(out, f.terms()[i]);
    }
    return out;
}

[[noreturn]] void bad_certificate(const std::string& what) {
    throw Error(ErrorKind::InvariantViolation, "certificate: " + what);
}

Rational json_rational(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (!j.is_string()) bad_certificate("expected a rational string, got " + j.dump());
    try {
        return parse_rational(j.get<std::string>());
    } catch (const Error&) {
        bad_certificate("malformed rational " + j.dump());
    }
}

}  // namespace

Instance parse_instance(std::string_view text) {
    std::optional<Header> header;
    std::optional<TropFunction> target;
    std::vector<TropFunction> gens;
    std::vector<std::string> names;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (tokens(line, 0, line.size()).empty()) continue;

        if (!header) {
            header = parse_header(line, line_no);
            continue;
        }
        const auto colon = line.find(':');
        if (colon == std::string_view::npos) throw SyntaxError(line_no, 1, "expected '<name>: terms'");
        auto name_tok = tokens(line, 0, colon);
        if (name_tok.size() != 1) throw SyntaxError(line_no, 1, "expected a single function name before ':'");
        const std::string name(line.substr(name_tok[0].first, name_tok[0].second - name_tok[0].first));
        for (std::size_t k = name_tok[0].first; k < name_tok[0].second; ++k) {
            if (!std::isalnum(static_cast<unsigned char>(line[k])) && line[k] != '_') {
                throw SyntaxError(line_no, k + 1, "invalid character in function name");
            }
        }
        if ((name == "F" && target) || std::find(names.begin(), names.end(), name) != names.end()) {
            throw SyntaxError(line_no, name_tok[0].first + 1, "function '" + name + "' defined twice");
        }
        std::vector<Term> terms;
        std::size_t from = colon + 1;
        if (tokens(line, from, line.size()).empty()) throw SyntaxError(line_no, colon + 2, "function has no terms");
        for (;;) {
            std::size_t semi = line.find(';', from);
            const std::size_t to = semi == std::string_view::npos ? line.size() : semi;
            terms.push_back(parse_term(line, from, to, line_no, header->n));
            if (semi == std::string_view::npos) break;
            from = semi + 1;
        }
        try {
            TropFunction f(header->n, header->flavor, header->semiring, std::move(terms));
            if (name == "F") {
                target = std::move(f);
            } else {
                gens.push_back(std::move(f));
                names.push_back(name);
            }
        } catch (const Error& e) {
            throw Error(ErrorKind::InvariantViolation, "line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    if (!header) throw SyntaxError(line_no, 1, "missing header line");
    if (!target) throw Error(ErrorKind::InvariantViolation, "instance defines no function F");
    return Instance{header->n, header->flavor, header->semiring, std::move(*target), std::move(gens), std::move(names)};
}

std::string serialize_instance(const Instance& inst) {
    std::string out = "n=" + std::to_string(inst.n) + " flavor=" + to_string(inst.flavor) +
                      " semiring=" + to_string(inst.semiring) + "\n";
    out += function_line("F", inst.f) + "\n";
    for (std::size_t i = 0; i < inst.gens.size(); ++i) {
        const std::string name = i < inst.gen_names.size() ? inst.gen_names[i] : "G" + std::to_string(i + 1);
        out += function_line(name, inst.gens[i]) + "\n";
    }
    return out;
}

Instance read_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::EmptyInput, "cannot read '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_instance(buf.str());
}

IdealFlavor default_ideal_flavor(const Instance& inst) {
    if (inst.semiring == Semiring::T) return IdealFlavor::Extended;
    switch (inst.flavor) {
    case Flavor::Laurent: return IdealFlavor::Laurent;
    case Flavor::Plq: return IdealFlavor::Pl;
    default: return IdealFlavor::Standard;
    }
}

const TropFunction& function_named(const Instance& inst, const std::string& name) {
    if (name == "F") return inst.f;
    for (std::size_t i = 0; i < inst.gens.size(); ++i) {
        if (inst.gen_names[i] == name) return inst.gens[i];
    }
    throw Error(ErrorKind::EmptyInput, "no function named '" + name + "'");
}

json to_json(const Rational& q) { return to_string(q); }

json to_json(const Point& p) {
    json a = json::array();
    for (const Rational& v : p) a.push_back(to_string(v));
    return a;
}

json to_json(const TropFunction& f) {
    json terms = json::array();
    for (const Term& t : f.terms()) {
        terms.push_back({{"exponent", to_json(t.exponent)},
                         {"coefficient", to_string(t.coefficient.value)},
                         {"tag", to_string(t.coefficient.tag)}});
    }
    return terms;
}

json to_json(const Certificate& c) {
    json j;
    j["m"] = c.m;
    json J = json::array();
    for (std::size_t i : c.J) J.push_back(i + 1);
    j["J"] = J;
    j["flavor"] = to_string(c.flavor);
    json cof = json::array();
    for (std::size_t k = 0; k < c.J.size(); ++k) {
        cof.push_back({{"generator", c.J[k] + 1}, {"terms", to_json(c.cofactors[k])}});
    }
    j["cofactors"] = cof;
    return j;
}

json to_json(const VerificationReport& r) {
    json j;
    j["status"] = to_string(r.status);
    j["symbolic_equal"] = r.symbolic_equal;
    j["sampled_points_checked"] = r.sampled_points_checked;
    j["cells_checked"] = r.cells_checked;
    if (!r.message.empty()) j["message"] = r.message;
    if (r.first_discrepancy) {
        const Discrepancy& d = *r.first_discrepancy;
        j["first_discrepancy"] = {{"point", to_json(d.point)},
                                  {"lhs", to_string(d.lhs.value)},
                                  {"lhs_tag", to_string(d.lhs.tag)},
                                  {"rhs", to_string(d.rhs.value)},
                                  {"rhs_tag", to_string(d.rhs.tag)}};
    } else {
        j["first_discrepancy"] = nullptr;
    }
    return j;
}

std::string failure_label(const Failure& f) {
    std::string s = to_string(f.reason);
    if (f.generator) s += "(" + std::to_string(*f.generator + 1) + ")";
    return s;
}

json to_json(const Verdict& v) {
    json j;
    j["member"] = v.member;
    j["flavor"] = to_string(v.flavor);
    json regions = json::array();
    for (std::size_t r = 0; r < v.regions.regions.size(); ++r) {
        const Region& d = v.regions.regions[r];
        regions.push_back({{"region", r + 1},
                           {"exponent", to_json(d.exponent)},
                           {"coefficient", to_string(d.coefficient.value)},
                           {"tag", to_string(d.coefficient.tag)},
                           {"interior_point", to_json(d.interior_point)}});
    }
    j["regions"] = regions;
    json as = json::array();
    for (const Assignment& a : v.assignments) {
        json e{{"region", a.region + 1},
               {"generator", a.generator + 1},
               {"gradient", to_json(a.generator_term.exponent)},
               {"e1", a.e1_ok}};
        if (a.tag_class) e["tag_class"] = to_string(*a.tag_class);
        as.push_back(std::move(e));
    }
    j["assignments"] = as;
    json fs = json::array();
    for (const Failure& f : v.failures) {
        json e{{"label", failure_label(f)}, {"reason", to_string(f.reason)}};
        if (f.region) e["region"] = *f.region + 1;
        if (f.generator) e["generator"] = *f.generator + 1;
        fs.push_back(std::move(e));
    }
    j["failures"] = fs;
    return j;
}

Certificate certificate_from_json(const json& j, std::size_t n, Semiring semiring, IdealFlavor fallback) {
    if (!j.is_object()) bad_certificate("expected an object");
    if (j.contains("certificate")) return certificate_from_json(j.at("certificate"), n, semiring, fallback);
    Certificate c;
    c.flavor = fallback;
    if (j.contains("flavor")) {
        if (!j["flavor"].is_string()) bad_certificate("flavor must be a string");
        std::optional<IdealFlavor> f = parse_ideal_flavor(j["flavor"].get<std::string>());
        if (!f) bad_certificate("unknown flavor " + j["flavor"].dump());
        c.flavor = *f;
    }
    if (!j.contains("m") || !j["m"].is_number_integer()) bad_certificate("m must be an integer");
    c.m = j["m"].get<long>();
    if (!j.contains("cofactors") || !j["cofactors"].is_array()) bad_certificate("cofactors must be an array");
    std::map<std::size_t, TropFunction> by_gen;
    for (const json& cf : j["cofactors"]) {
        if (!cf.contains("generator") || !cf["generator"].is_number_integer() || cf["generator"].get<long>() < 1) {
            bad_certificate("cofactor needs a positive generator number");
        }
        const std::size_t g = cf["generator"].get<std::size_t>() - 1;
        if (!cf.contains("terms") || !cf["terms"].is_array()) bad_certificate("cofactor terms must be an array");
        std::vector<Term> terms;
        for (const json& t : cf["terms"]) {
            if (!t.contains("exponent") || !t["exponent"].is_array()) bad_certificate("term needs an exponent array");
            Term term;
            for (const json& e : t["exponent"]) term.exponent.push_back(json_rational(e));
            term.coefficient.value = json_rational(t.value("coefficient", json("0")));
            const std::string tag = t.value("tag", std::string("real"));
            if (tag == "nu") term.coefficient.tag = Tag::Nu;
            else if (tag != "real") bad_certificate("tag must be real or nu");
            terms.push_back(std::move(term));
        }
        try {
            auto [it, fresh] = by_gen.try_emplace(g, TropFunction(n, cofactor_flavor(c.flavor), semiring, std::move(terms)));
            if (!fresh) bad_certificate("generator " + std::to_string(g + 1) + " listed twice");
        } catch (const SyntaxError&) {
            throw;
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::InvariantViolation) throw;
            bad_certificate(e.what());
        }
    }
    for (auto& [g, h] : by_gen) {
        c.J.push_back(g);
        c.cofactors.push_back(h);
    }
    if (j.contains("J")) {
        std::vector<std::size_t> listed;
        for (const json& v : j["J"]) {
            if (!v.is_number_integer() || v.get<long>() < 1) bad_certificate("J entries must be positive integers");
            listed.push_back(v.get<std::size_t>() - 1);
        }
        std::sort(listed.begin(), listed.end());
        if (listed != c.J) bad_certificate("J does not match the listed cofactors");
    }
    return c;
}

std::string amoeba_svg(const std::vector<Segment>& segments, const BoundingBox& box, int precision) {
    const double x0 = approx(box.x0), y0 = approx(box.y0), x1 = approx(box.x1), y1 = approx(box.y1);
    const double w = x1 - x0, h = y1 - y0;
    std::ostringstream out;
    out << std::setprecision(precision);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << x0 << ' ' << 0.0 - y1 << ' ' << w << ' ' << h
        << "\" width=\"600\" height=\"" << (w > 0 ? 600.0 * h / w : 600.0) << "\">\n";
    out << "  <rect x=\"" << x0 << "\" y=\"" << 0.0 - y1 << "\" width=\"" << w << "\" height=\"" << h
        << "\" fill=\"white\" stroke=\"#999\" stroke-width=\"" << w / 300 << "\"/>\n";
    for (const Segment& s : segments) {
        out << "  <polyline points=\"" << approx(s.from[0]) << ',' << 0.0 - approx(s.from[1]) << ' '
            << approx(s.to[0]) << ',' << 0.0 - approx(s.to[1]) << "\" fill=\"none\" stroke=\"black\" stroke-width=\"" << w / 150
            << "\" data-regions=\"" << s.region_a + 1 << ' ' << s.region_b + 1 << "\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace tropnull::io
