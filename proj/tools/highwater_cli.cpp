#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "highwater/eigen.hpp"
#include "highwater/format.hpp"
#include "highwater/identities.hpp"
#include "highwater/ideals.hpp"
#include "highwater/quotient.hpp"
#include "highwater/sampling.hpp"

using namespace highwater;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct Options {
    std::string format = "text";
    std::string out;
    std::uint64_t seed = 1;
    long imax = -1;
    long max_n = -1;
    long axis = 0;
    std::size_t samples = 0;
    std::size_t cutoff = 50;
    std::vector<std::string> elements;
    std::string gens, elt, suite;
    bool collapse_j = false, in_j = false;
};

bool json_mode(const Options& o) { return o.format == "json"; }

void emit(const Options& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream f(o.out);
    if (!f) throw std::runtime_error("cannot write " + o.out);
    f << text;
    if (!text.empty() && text.back() != '\n') f << '\n';
}

void warn(const std::vector<std::string>& ws) {
    for (const auto& w : ws) std::cerr << "warning: " << w << '\n';
}

Element parse_one(const Field& F, const std::string& text) {
    auto r = parse_element(F, text);
    warn(r.warnings);
    return r.value;
}

std::vector<Element> parse_gens(const Field& F, const std::string& text) {
    std::vector<std::string> ws;
    auto gens = parse_element_list(F, text, &ws);
    warn(ws);
    return gens;
}

json scalars(const std::vector<Scalar>& xs) {
    json a = json::array();
    for (const auto& x : xs) a.push_back(x.to_string());
    return a;
}

std::string join(const std::vector<Scalar>& xs) {
    std::string s = "(";
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + xs[i].to_string();
    return s + ")";
}

int run_mul(const Options& o, const Field& F) {
    if (o.elements.size() < 2) throw CLI::ValidationError("mul needs at least two elements");
    Element x = parse_one(F, o.elements[0]);
    for (std::size_t i = 1; i < o.elements.size(); ++i) x = x * parse_one(F, o.elements[i]);
    emit(o, json_mode(o) ? element_to_json(x).dump(2) : format_element(x));
    return kOk;
}

int run_weight(const Options& o, const Field& F) {
    if (o.elements.size() != 1) throw CLI::ValidationError("weight takes one element");
    Scalar w = weight(parse_one(F, o.elements[0]));
    emit(o, json_mode(o) ? json{{"field", F.characteristic()}, {"weight", w.to_string()}}.dump(2) : w.to_string());
    return kOk;
}

int run_eigen(const Options& o, const Field& F) {
    if (o.elements.size() != 1) throw CLI::ValidationError("eigen takes one element");
    Element x = parse_one(F, o.elements[0]);
    auto d = eigendecompose(x, o.axis);
    if (json_mode(o)) {
        json comps = json::array();
        for (const auto& [lambda, part] : d.components())
            comps.push_back({{"eigenvalue", lambda.to_string()}, {"element", element_to_json(part)}});
        emit(o, json{{"field", F.characteristic()}, {"axis", o.axis}, {"components", comps}}.dump(2));
    } else {
        std::ostringstream os;
        for (const auto& [lambda, part] : d.components()) os << lambda.to_string() << ": " << format_element(part) << '\n';
        emit(o, os.str());
    }
    return kOk;
}

json classify_json(const Ideal& I) {
    json j{{"variant", variant_name(I.variant())},
           {"pattern", nullptr},
           {"epsilon", nullptr},
           {"contains_J", I.contains_j()},
           {"j_tuple", nullptr},
           {"extension_dim", 0},
           {"quotient_dim", nullptr}};
    if (I.variant() == Ideal::Variant::Pattern) {
        j["pattern"] = scalars(I.pattern());
        j["epsilon"] = I.epsilon();
        j["extension_dim"] = I.extension().size();
    }
    if (I.variant() == Ideal::Variant::InJ) j["j_tuple"] = scalars(I.j_ideal().tuple());
    if (auto d = I.quotient_dim()) j["quotient_dim"] = *d;
    return j;
}

int run_classify(const Options& o, const Field& F) {
    Ideal I = ideal_of(parse_gens(F, o.gens));
    json j = classify_json(I);
    if (json_mode(o)) {
        emit(o, j.dump(2));
        return kOk;
    }
    std::ostringstream os;
    os << "variant: " << variant_name(I.variant()) << '\n';
    if (I.variant() == Ideal::Variant::Pattern)
        os << "pattern: " << join(I.pattern()) << "\nepsilon: " << I.epsilon() << "\nextension_dim: " << I.extension().size()
           << '\n';
    if (I.variant() == Ideal::Variant::InJ) os << "j_tuple: " << join(I.j_ideal().tuple()) << '\n';
    os << "contains_J: " << (I.contains_j() ? "true" : "false") << '\n';
    if (auto d = I.quotient_dim()) os << "quotient_dim: " << *d << '\n';
    emit(o, os.str());
    return kOk;
}

int run_member(const Options& o, const Field& F) {
    Ideal I = ideal_of(parse_gens(F, o.gens));
    Element x = parse_one(F, o.elt);
    Element rem = I.reduce(x);
    if (json_mode(o))
        emit(o, json{{"member", rem.is_zero()}, {"remainder", element_to_json(rem)}}.dump(2));
    else
        emit(o, std::string(rem.is_zero() ? "member" : "not a member") + "\nremainder: " + format_element(rem));
    return kOk;
}

int run_quotient(const Options& o, const Field& F) {
    Ideal I = ideal_of(parse_gens(F, o.gens));
    if (o.collapse_j) I = collapse_j(I);
    FiniteAlgebra Q = o.in_j ? FiniteAlgebra::of_j(I) : FiniteAlgebra::of(I);
    if (json_mode(o) || !o.out.empty()) {
        emit(o, Q.to_json().dump(2));
        return kOk;
    }
    std::ostringstream os;
    os << "dimension " << Q.dim() << " over " << F.name() << '\n';
    for (std::size_t i = 0; i < Q.dim(); ++i) os << "  b" << i << " = " << format_element(Q.basis_labels()[i]) << '\n';
    for (std::size_t i = 0; i < Q.dim(); ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            Element prod = Q.lift(Q.structure(i, j));
            os << "  b" << i << " * b" << j << " = " << format_element(prod) << '\n';
        }
    emit(o, os.str());
    return kOk;
}

int run_families(const Options& o, const Field& F) {
    long max_n = o.max_n > 0 ? o.max_n : 8;
    auto rows = families(max_n, F);
    Report rep = family_report(max_n, F);
    if (json_mode(o)) {
        json rs = json::array();
        for (const auto& r : rows)
            rs.push_back({{"n", r.n},
                          {"H_hat", r.h_hat},
                          {"H", r.h},
                          {"L_hat", r.l_hat},
                          {"L", r.l},
                          {"expected", {{"H_hat", expected_h(r.n, true)},
                                        {"H", expected_h(r.n, false)},
                                        {"L_hat", expected_l(r.n, true)},
                                        {"L", expected_l(r.n, false)}}}});
        emit(o, json{{"field", F.characteristic()}, {"rows", rs}, {"passed", rep.passed()}}.dump(2));
    } else {
        std::ostringstream os;
        os << "   n  H^   H  L^   L\n";
        for (const auto& r : rows) {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%4ld %3zu %3zu %3zu %3zu\n", r.n, r.h_hat, r.h, r.l_hat, r.l);
            os << buf;
        }
        if (!rep.passed()) os << rep.to_text();
        emit(o, os.str());
    }
    return rep.passed() ? kOk : kFailed;
}

Report verify_suite(const Options& o, const Field& F) {
    auto pick = [](long v, long dflt) { return v > 0 ? v : dflt; };
    const std::string& s = o.suite;
    if (s == "fusion") return fusion_check(pick(o.imax, 12), F);
    if (s == "products") return product_identities(pick(o.imax, 8), F);
    if (s == "reflections") return reflection_identities(pick(o.imax, 9), F);
    if (s == "miyamoto") {
        Report r{"Miyamoto maps by eigenvectors and by indices", {}};
        for (long ax = -3; ax <= 3; ++ax) r.merge(miyamoto_consistency(ax, pick(o.imax, 15), F));
        return r;
    }
    if (s == "baric") return baric_frobenius_check(F, o.samples ? o.samples : 500, 15, o.seed);
    if (s == "ideals") return ideal_engine_check(F, o.samples ? o.samples : 100, 10, o.seed);
    if (s == "jideals") return jideal_check(F, pick(o.max_n, 5), o.samples ? o.samples : 20, o.seed);
    if (s == "families") return family_report(pick(o.max_n, 12), F);
    if (s == "orbits") return orbit_report(F, pick(o.max_n, 8), o.cutoff);
    if (s == "exceptional") return exceptional_suite(F);
    throw CLI::ValidationError("unknown suite " + s);
}

int run_verify(const Options& o, const Field& F) {
    Report r = verify_suite(o, F);
    emit(o, json_mode(o) ? r.to_json().dump(2) : r.to_text());
    return r.passed() ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact arithmetic, eigenvectors, ideals and quotients of the Highwater algebra", "highwater"};
    app.require_subcommand(1);
    Options o;
    std::string char_text;
    app.add_option("--char", char_text, "Characteristic: 0 for Q, or a prime p >= 5")->required();
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--out", o.out, "Write the output to this file");
    app.add_option("--seed", o.seed, "Seed for randomized suites");
    app.fallthrough();

    std::function<int(const Options&, const Field&)> handler;
    auto on = [&](CLI::App* sub, auto fn) { sub->callback([&handler, fn] { handler = fn; }); };

    auto* mul = app.add_subcommand("mul", "Product of elements, left to right");
    mul->add_option("elements", o.elements, "Element literals")->required();
    on(mul, run_mul);
    auto* wt = app.add_subcommand("weight", "Baric weight of an element");
    wt->add_option("element", o.elements, "Element literal")->required();
    on(wt, run_weight);
    auto* eig = app.add_subcommand("eigen", "Eigencomponents of an element for the adjoint of an axis");
    eig->add_option("element", o.elements, "Element literal")->required();
    eig->add_option("--axis", o.axis, "Index i of the axis a(i)");
    on(eig, run_eigen);

    auto* ideal = app.add_subcommand("ideal", "Ideals generated by elements");
    ideal->require_subcommand(1);
    auto* cls = ideal->add_subcommand("classify", "Classify the ideal generated by --gen");
    cls->add_option("--gen", o.gens, "Generators separated by ';'")->required();
    on(cls, run_classify);
    auto* mem = ideal->add_subcommand("member", "Decide membership of --elt in the ideal generated by --gen");
    mem->add_option("--gen", o.gens, "Generators separated by ';'")->required();
    mem->add_option("--elt", o.elt, "Element literal")->required();
    on(mem, run_member);

    auto* quo = app.add_subcommand("quotient", "Structure constants of the quotient by the ideal generated by --gen");
    quo->add_option("--gen", o.gens, "Generators separated by ';'")->required();
    quo->add_flag("--collapse-j", o.collapse_j, "Also quotient by J");
    quo->add_flag("--in-j", o.in_j, "For an ideal inside J, build J modulo the ideal");
    on(quo, run_quotient);

    auto* fam = app.add_subcommand("families", "Dimensions of the quotients by (a0 - a(n)) and (2a0 - a(-n) - a(n))");
    fam->add_option("--max-n", o.max_n, "Largest n")->check(CLI::PositiveNumber);
    on(fam, run_families);

    auto* ver = app.add_subcommand("verify", "Run a verification suite");
    ver->add_option("suite", o.suite, "Suite name")
        ->required()
        ->check(CLI::IsMember({"fusion", "products", "reflections", "miyamoto", "baric", "ideals", "jideals", "families",
                               "orbits", "exceptional"}));
    ver->add_option("--imax", o.imax, "Index bound")->check(CLI::PositiveNumber);
    ver->add_option("--max-n", o.max_n, "Family or tuple-length bound")->check(CLI::PositiveNumber);
    ver->add_option("--samples", o.samples, "Number of random samples");
    ver->add_option("--cutoff", o.cutoff, "Largest orbit size before giving up");
    on(ver, run_verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        std::uint64_t c = 0;
        std::size_t used = 0;
        try {
            c = std::stoull(char_text, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != char_text.size()) throw FieldError("--char expects 0 or a prime, got '" + char_text + "'");
        Field F = c == 0 ? Field::rationals() : Field::make(c);
        return handler(o, F);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
}
