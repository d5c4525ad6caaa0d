#include "tropnull/cli.hpp"

#include "tropnull/certify.hpp"
#include "tropnull/check.hpp"
#include "tropnull/error.hpp"
#include "tropnull/io.hpp"
#include "tropnull/newton.hpp"
#include "tropnull/regions.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <sstream>

namespace tropnull::cli {

using nlohmann::json;

namespace {

constexpr int kMember = 0;
constexpr int kNonMember = 1;
constexpr int kInputError = 2;
constexpr int kInternalError = 3;

struct Options {
    std::string input;
    std::string output;
    std::string cert;
    std::string flavor;
    std::string function = "F";
    std::string point;
    std::vector<std::string> bbox{"-10", "-10", "10", "10"};
    bool json = false;
    int max_escalations = 20;
    std::uint64_t seed = VerifyOptions{}.seed;
    int precision = 6;
};

IdealFlavor choose_flavor(const Options& o, const io::Instance& inst) {
    if (o.flavor.empty()) return io::default_ideal_flavor(inst);
    std::optional<IdealFlavor> f = parse_ideal_flavor(o.flavor);
    if (!f) throw Error(ErrorKind::FlavorMismatch, "unknown flavor '" + o.flavor + "'");
    return *f;
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    if (!f) throw Error(ErrorKind::EmptyInput, "cannot write '" + path + "'");
    f << text;
}

void print_verdict(std::ostream& out, const Verdict& v) {
    out << (v.member ? "member" : "not a member") << " (" << to_string(v.flavor) << ")\n";
    for (const Assignment& a : v.assignments) {
        const Region& d = v.regions.regions[a.region];
        out << "  region " << a.region + 1 << " gradient " << to_string(d.exponent) << " -> generator "
            << a.generator + 1;
        if (a.tag_class) out << " [" << to_string(*a.tag_class) << "]";
        out << "\n";
    }
    for (const Failure& f : v.failures) {
        out << "  failure " << io::failure_label(f);
        if (f.region) out << " at region " << *f.region + 1 << " gradient " << to_string(v.regions.regions[*f.region].exponent);
        out << "\n";
    }
}

void print_report(std::ostream& out, const VerificationReport& r) {
    out << to_string(r.status);
    if (!r.message.empty()) out << ": " << r.message;
    out << " (" << r.sampled_points_checked << " sample points";
    if (r.cells_checked) out << ", " << r.cells_checked << " cells";
    out << ")\n";
    if (r.first_discrepancy) {
        const Discrepancy& d = *r.first_discrepancy;
        out << "  at x = " << to_string(d.point) << ": F^m = " << to_string(d.lhs) << ", certificate = "
            << to_string(d.rhs) << "\n";
    }
}

void print_certificate(std::ostream& out, const Certificate& c) {
    out << "m = " << c.m << "\n";
    for (std::size_t k = 0; k < c.J.size(); ++k) {
        out << "  h" << c.J[k] + 1 << " = " << to_string(c.cofactors[k]) << "\n";
    }
}

int cmd_check(const Options& o, std::ostream& out) {
    const io::Instance inst = io::read_instance_file(o.input);
    const Verdict v = check(inst.f, inst.gens, choose_flavor(o, inst));
    if (o.json) emit(out, io::to_json(v));
    else print_verdict(out, v);
    return v.member ? kMember : kNonMember;
}

int cmd_certify(const Options& o, std::ostream& out) {
    const io::Instance inst = io::read_instance_file(o.input);
    const Verdict v = check(inst.f, inst.gens, choose_flavor(o, inst));
    if (!v.member) {
        if (o.json) emit(out, json{{"member", false}, {"verdict", io::to_json(v)}});
        else print_verdict(out, v);
        return kNonMember;
    }
    VerifyOptions vo;
    vo.seed = o.seed;
    const SynthesisResult r = synthesize_detailed(inst.f, inst.gens, v, o.max_escalations, vo);
    const json cert = io::to_json(r.certificate);
    if (!o.output.empty()) write_file(o.output, cert.dump(2) + "\n");
    if (o.json) {
        emit(out, json{{"member", true},
                       {"certificate", cert},
                       {"bound", r.bound},
                       {"escalations", r.escalations},
                       {"verification", io::to_json(r.report)}});
    } else {
        print_certificate(out, r.certificate);
        out << "bound " << r.bound << ", escalations " << r.escalations << "\n";
        print_report(out, r.report);
    }
    return kMember;
}

int cmd_verify(const Options& o, std::ostream& out) {
    const io::Instance inst = io::read_instance_file(o.input);
    std::ifstream in(o.cert);
    if (!in) throw Error(ErrorKind::EmptyInput, "cannot read '" + o.cert + "'");
    const json j = json::parse(in);
    const Certificate c = io::certificate_from_json(j, inst.n, inst.semiring, choose_flavor(o, inst));
    VerifyOptions vo;
    vo.seed = o.seed;
    const VerificationReport r = verify(inst.f, inst.gens, c, vo);
    if (o.json) emit(out, io::to_json(r));
    else print_report(out, r);
    return r.passed() ? kMember : kNonMember;
}

int cmd_regions(const Options& o, std::ostream& out) {
    const io::Instance inst = io::read_instance_file(o.input);
    const RegionDecomposition d = decompose(io::function_named(inst, o.function));
    if (o.json) {
        json a = json::array();
        for (std::size_t r = 0; r < d.regions.size(); ++r) {
            const Region& g = d.regions[r];
            a.push_back({{"region", r + 1},
                         {"exponent", io::to_json(g.exponent)},
                         {"coefficient", to_string(g.coefficient.value)},
                         {"tag", to_string(g.coefficient.tag)},
                         {"interior_point", io::to_json(g.interior_point)}});
        }
        emit(out, json{{"function", o.function}, {"regions", a}});
    } else {
        out << d.regions.size() << " regions of " << o.function << "\n";
        for (std::size_t r = 0; r < d.regions.size(); ++r) {
            const Region& g = d.regions[r];
            out << "  " << r + 1 << ": gradient " << to_string(g.exponent) << ", coefficient "
                << to_string(g.coefficient) << ", e.g. x = " << to_string(g.interior_point) << "\n";
        }
    }
    return kMember;
}

int cmd_newton(const Options& o, std::ostream& out) {
    const io::Instance inst = io::read_instance_file(o.input);
    const newton::NewtonPolytope p = newton::newton_polytope(io::function_named(inst, o.function));
    json j{{"function", o.function}, {"dimension", newton::dimension(p)}};
    json support = json::array();
    for (const Point& q : p.support) support.push_back(io::to_json(q));
    j["support"] = support;
    json fits = json::array();
    if (o.function == "F") {
        for (std::size_t i = 0; i < inst.gens.size(); ++i) {
            const newton::NewtonPolytope gi = newton::newton_polytope(inst.gens[i]);
            json e{{"generator", i + 1}};
            std::optional<Rational> m0 = newton::min_dilation_fit(gi, p);
            e["min_dilation"] = m0 ? io::to_json(*m0) : json(nullptr);
            std::optional<newton::MonomialFit> mf;
            if (inst.flavor == Flavor::Poly) mf = newton::min_monomial_fit(gi, p);
            if (mf) e["monomial_fit"] = {{"m", mf->m}, {"translate", io::to_json(mf->translate)}};
            else e["monomial_fit"] = nullptr;
            fits.push_back(std::move(e));
        }
    }
    j["generator_fits"] = fits;
    if (o.json) {
        emit(out, j);
        return kMember;
    }
    out << "Newton polytope of " << o.function << ": dimension " << newton::dimension(p) << ", support";
    for (const Point& q : p.support) out << " " << to_string(q);
    out << "\n";
    for (const json& e : fits) {
        out << "  generator " << e["generator"].get<std::size_t>() << ": least dilation "
            << (e["min_dilation"].is_null() ? "none" : e["min_dilation"].get<std::string>());
        if (!e["monomial_fit"].is_null()) {
            out << ", monomial fit at m = " << e["monomial_fit"]["m"].get<long>();
        }
        out << "\n";
    }
    return kMember;
}

int cmd_amoeba(const Options& o, std::ostream& out) {
    const io::Instance inst = io::read_instance_file(o.input);
    if (o.bbox.size() != 4) throw Error(ErrorKind::EmptyInput, "--bbox takes four numbers");
    BoundingBox box{parse_rational(o.bbox[0]), parse_rational(o.bbox[1]), parse_rational(o.bbox[2]),
                    parse_rational(o.bbox[3])};
    if (box.x0 >= box.x1 || box.y0 >= box.y1) throw Error(ErrorKind::EmptyInput, "--bbox must be x0 y0 x1 y1 with x0 < x1, y0 < y1");
    const std::vector<Segment> segs = amoeba_segments_2d(io::function_named(inst, o.function), box);
    const std::string svg = io::amoeba_svg(segs, box, o.precision);
    if (!o.output.empty()) write_file(o.output, svg);
    if (o.json) {
        json a = json::array();
        for (const Segment& s : segs) {
            a.push_back({{"from", io::to_json(s.from)}, {"to", io::to_json(s.to)},
                         {"regions", {s.region_a + 1, s.region_b + 1}}});
        }
        emit(out, json{{"function", o.function}, {"segments", a}});
    } else if (o.output.empty()) {
        out << svg;
    } else {
        out << segs.size() << " segments written to " << o.output << "\n";
    }
    return kMember;
}

int cmd_eval(const Options& o, std::ostream& out) {
    const io::Instance inst = io::read_instance_file(o.input);
    std::string text = o.point;
    std::replace(text.begin(), text.end(), ',', ' ');
    std::istringstream ss(text);
    Point x;
    for (std::string tok; ss >> tok;) x.push_back(parse_rational(tok));
    const ExtScalar v = eval(io::function_named(inst, o.function), x);
    if (o.json) emit(out, json{{"function", o.function}, {"point", io::to_json(x)}, {"value", to_string(v.value)},
                               {"tag", to_string(v.tag)}});
    else out << o.function << "(" << to_string(x) << ") = " << to_string(v) << "\n";
    return kMember;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Radical membership for tropical polynomial ideals"};
    app.require_subcommand(1);
    Options o;

    auto input = [&](CLI::App* s) { s->add_option("-i,--input", o.input, "instance file (.trop)")->required(); };
    auto json_flag = [&](CLI::App* s) { s->add_flag("--json", o.json, "print JSON"); };
    auto flavor = [&](CLI::App* s) {
        s->add_option("--flavor", o.flavor, "standard, laurent, restricted, pl or extended");
    };
    auto function = [&](CLI::App* s) { s->add_option("--function", o.function, "function name (default F)"); };
    auto seed = [&](CLI::App* s) { s->add_option("--seed", o.seed, "seed of the verifier's sample points"); };

    CLI::App* check_cmd = app.add_subcommand("check", "decide radical membership");
    input(check_cmd);
    flavor(check_cmd);
    json_flag(check_cmd);

    CLI::App* certify_cmd = app.add_subcommand("certify", "synthesize and verify a certificate");
    input(certify_cmd);
    flavor(certify_cmd);
    json_flag(certify_cmd);
    seed(certify_cmd);
    certify_cmd->add_option("-o,--output", o.output, "write the certificate (.cert.json)");
    certify_cmd->add_option("--max-escalations", o.max_escalations, "doublings of m after the bound")
        ->check(CLI::Range(0, 40));

    CLI::App* verify_cmd = app.add_subcommand("verify", "verify a certificate against an instance");
    input(verify_cmd);
    flavor(verify_cmd);
    json_flag(verify_cmd);
    seed(verify_cmd);
    verify_cmd->add_option("-c,--certificate", o.cert, "certificate file")->required();

    CLI::App* regions_cmd = app.add_subcommand("regions", "list the regions of a function");
    input(regions_cmd);
    function(regions_cmd);
    json_flag(regions_cmd);

    CLI::App* newton_cmd = app.add_subcommand("newton", "Newton polytope and generator fits");
    input(newton_cmd);
    function(newton_cmd);
    json_flag(newton_cmd);

    CLI::App* amoeba_cmd = app.add_subcommand("amoeba", "render the amoeba of a function in two variables");
    input(amoeba_cmd);
    function(amoeba_cmd);
    json_flag(amoeba_cmd);
    amoeba_cmd->add_option("--bbox", o.bbox, "x0 y0 x1 y1")->expected(4);
    amoeba_cmd->add_option("-o,--output", o.output, "SVG file");
    amoeba_cmd->add_option("--precision", o.precision, "significant digits in the SVG")->check(CLI::Range(1, 17));

    CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate a function at a point");
    input(eval_cmd);
    function(eval_cmd);
    json_flag(eval_cmd);
    eval_cmd->add_option("--point", o.point, "coordinates, e.g. \"1/2 -3\"")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : kInputError;
    }

    try {
        if (check_cmd->parsed()) return cmd_check(o, out);
        if (certify_cmd->parsed()) return cmd_certify(o, out);
        if (verify_cmd->parsed()) return cmd_verify(o, out);
        if (regions_cmd->parsed()) return cmd_regions(o, out);
        if (newton_cmd->parsed()) return cmd_newton(o, out);
        if (amoeba_cmd->parsed()) return cmd_amoeba(o, out);
        if (eval_cmd->parsed()) return cmd_eval(o, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return e.is_input_error() ? kInputError : kInternalError;
    } catch (const json::exception& e) {
        err << "error: malformed JSON: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternalError;
    }
    return kInternalError;
}

}  // namespace tropnull::cli
