// Command-line front end: fiber classification, fundamental polynomials,
// section derivation, Gram matrices, and assembly of the 68-point system on
// Y^2 = X^3 + t^360 + 1.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <iostream>

#include "mwl/basechange.hpp"
#include "mwl/derive.hpp"
#include "mwl/factor.hpp"
#include "mwl/heights.hpp"
#include "mwl/io.hpp"

namespace {

using namespace mwl;

constexpr int kExitOk = 0;
constexpr int kExitMathFailure = 1;
constexpr int kExitUsage = 2;

SurfaceModel parse_surface(const std::string& s) {
    if (s == "master") return SurfaceModel::master();
    auto comma = s.find(',');
    if (comma == std::string::npos)
        throw CLI::ValidationError("--surface", "expected a,b or 'master'");
    return SurfaceModel(std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1)));
}

void emit(const std::string& path, const std::string& content) {
    if (path.empty()) return;
    write_file(path, content);
}

int cmd_classify(const std::string& surface, const std::string& format,
                 const std::string& emit_path) {
    SurfaceModel s = parse_surface(surface);
    auto fibers = classify_fibers(s);
    int rank = shioda_tate_rank(s);
    std::ostringstream text;
    text << s.name() << ": y^2 = x^3 + v^" << s.a << " (v^" << s.b << " + 1)\n";
    text << "rank = " << rank << "\n";
    try {
        LatticeType lt = lattice_type(s);
        text << "lattice = " << lt.name << " (rank " << lt.rank << ", discriminant "
             << lt.discriminant.to_string() << ")\n";
    } catch (const std::exception& e) {
        text << "lattice = (outside the tabulated family: " << e.what() << ")\n";
    }
    text << "fibers:\n";
    for (const auto& f : fibers)
        text << "  " << f.place_string() << "  order " << f.vanishing_order << "  type "
             << to_string(f.kodaira) << "  lattice " << to_string(f.lattice) << "  components "
             << f.component_count << "\n";
    auto pm = birational_partner(s);
    text << "partner: " << pm.partner.name() << " via " << pm.forward << "\n";
    if (format == "json") {
        nlohmann::ordered_json j;
        j["surface"] = {s.a, s.b};
        j["rank"] = rank;
        try {
            LatticeType lt = lattice_type(s);
            j["lattice"] = {{"name", lt.name},
                            {"rank", lt.rank},
                            {"discriminant", lt.discriminant.to_string()}};
        } catch (const std::exception&) {
        }
        j["fibers"] = nlohmann::ordered_json::array();
        for (const auto& f : fibers)
            j["fibers"].push_back({{"place", f.place_string()},
                                   {"order", f.vanishing_order},
                                   {"type", to_string(f.kodaira)},
                                   {"components", f.component_count}});
        j["partner"] = pm.partner.name();
        std::cout << j.dump(2) << "\n";
        emit(emit_path, j.dump(2) + "\n");
    } else {
        std::cout << text.str();
        emit(emit_path, text.str());
    }
    return kExitOk;
}

int cmd_fundpoly(const std::string& surface, const std::string& format,
                 const std::string& emit_path) {
    SurfaceModel s = parse_surface(surface);
    QPoly phi = fundpoly_for(s);
    std::string var = (s.a == 1 && s.b == 3) ? "a" : (s.a == 1 && s.b == 4 ? "U" : "u");
    QPoly primitive = to_primitive_integer(phi);
    Factorization fac = structured_factor(primitive);
    std::ostringstream text;
    text << s.name() << " fundamental polynomial (" << var << "):\n";
    text << "  " << to_text(primitive, var) << "\n";
    auto [psi, kk] = detect_substitution(primitive);
    if (kk > 1)
        text << "substitution: Psi(" << var << "^" << kk << ") with Psi = "
             << to_text(psi, var) << "\n";
    text << "factors: " << to_text(fac, var) << "\n";
    if (format == "json") {
        nlohmann::ordered_json j;
        j["surface"] = {s.a, s.b};
        j["variable"] = var;
        j["polynomial"] = to_text(primitive, var);
        j["factors"] = nlohmann::ordered_json::array();
        for (const auto& f : fac.factors)
            j["factors"].push_back(
                {{"poly", to_text(f.poly, var)},
                 {"multiplicity", f.multiplicity},
                 {"status",
                  f.status == FactorStatus::ProvenIrreducible ? "irreducible" : "unresolved"}});
        std::cout << j.dump(2) << "\n";
        emit(emit_path, j.dump(2) + "\n");
    } else {
        std::cout << text.str();
        emit(emit_path, text.str());
    }
    return kExitOk;
}

int cmd_sections(const std::string& surface, const std::string& format,
                 const std::string& emit_path) {
    SurfaceModel s = parse_surface(surface);
    DerivedBasis basis = derive_basis(s);
    for (const auto& q : basis.sections)
        if (!verify_section(q)) {
            std::cerr << "section verification failed on " << s.name() << "\n";
            return kExitMathFailure;
        }
    std::string payload = sections_to_json(s, basis.sections);
    if (format == "text") {
        std::cout << s.name() << ": " << basis.sections.size() << " sections derived and verified\n";
    } else {
        std::cout << payload;
    }
    emit(emit_path, payload);
    return kExitOk;
}

int cmd_gram(const std::string& surface, const std::string& from, const std::string& format,
             const std::string& emit_path) {
    std::vector<Section> sections;
    std::string label;
    if (!from.empty()) {
        sections = ingest_sections(from);
        label = "sections from " + from;
    } else {
        SurfaceModel s = parse_surface(surface);
        sections = derive_basis(s).sections;
        label = s.name();
    }
    GramMatrix g = gram(sections);
    if (format == "json") {
        std::cout << gram_to_json(g);
    } else {
        std::cout << label << " height-pairing Gram matrix:\n" << gram_to_text(g);
    }
    emit(emit_path, gram_to_json(g));
    return kExitOk;
}

int cmd_assemble(const std::string& data_dir, const std::string& format,
                 const std::string& emit_path) {
    std::vector<Section> d05, d15, d110;
    auto try_load = [&](const std::string& name, std::vector<Section>& into) {
        if (data_dir.empty()) return;
        std::filesystem::path p = std::filesystem::path(data_dir) / name;
        if (std::filesystem::exists(p)) into = ingest_sections(p.string());
    };
    try_load("sections_0_5.json", d05);
    try_load("sections_1_5.json", d15);
    try_load("sections_1_10.json", d110);
    MasterReport rep = assemble_master(d05, d15, d110);
    if (format == "json") {
        std::cout << report_to_json(rep);
    } else {
        std::cout << report_to_text(rep);
    }
    emit(emit_path, report_to_json(rep));
    return rep.all_points_verified() && rep.det_matches ? kExitOk : kExitMathFailure;
}

int cmd_verify(const std::string& from, const std::string& surface) {
    if (!from.empty()) {
        auto sections = ingest_sections(from);  // throws on first failure
        std::cout << "verified " << sections.size() << " sections from " << from << "\n";
        return kExitOk;
    }
    SurfaceModel s = parse_surface(surface);
    DerivedBasis basis = derive_basis(s);
    int bad = 0;
    for (size_t i = 0; i < basis.sections.size(); ++i) {
        bool ok = verify_section(basis.sections[i]);
        MasterPoint p = lift_to_master(basis.sections[i], static_cast<int>(i));
        bool lifted_ok = p.verify();
        std::cout << "  section " << i << ": " << (ok ? "ok" : "FAIL") << ", lift: "
                  << (lifted_ok ? "ok" : "FAIL") << "\n";
        if (!ok || !lifted_ok) ++bad;
    }
    return bad == 0 ? kExitOk : kExitMathFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Mordell-Weil lattice toolkit for y^2 = x^3 + v^a(v^b+1) and Y^2 = X^3 + t^360 + 1"};
    app.require_subcommand(1);

    std::string surface = "2,1", format = "text", emit_path, data_dir, from;
    long precision = 64;
    app.add_option("--precision", precision, "embedding precision in bits (64..4096)")
        ->check(CLI::Range(64L, 4096L));
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--emit", emit_path, "write the primary artifact to this path");
    app.add_option("--data", data_dir, "directory with external section data files");

    auto* classify = app.add_subcommand("classify", "singular fibers, rank and lattice type");
    classify->fallthrough();
    classify->add_option("--surface", surface, "a,b or 'master'");

    auto* fundpoly = app.add_subcommand("fundpoly", "fundamental polynomial and factor report");
    fundpoly->fallthrough();
    fundpoly->add_option("--surface", surface, "a,b");

    auto* sections = app.add_subcommand("sections", "derive and emit the generator sections");
    sections->fallthrough();
    sections->add_option("--surface", surface, "a,b");

    auto* gramc = app.add_subcommand("gram", "height-pairing Gram matrix of the basis");
    gramc->fallthrough();
    gramc->add_option("--surface", surface, "a,b");
    gramc->add_option("--from", from, "read sections from a JSON file instead of deriving");

    auto* assemble = app.add_subcommand("assemble", "lift everything to Y^2 = X^3 + t^360 + 1");
    assemble->fallthrough();

    auto* verify = app.add_subcommand("verify", "verify sections (derived or from a file)");
    verify->fallthrough();
    verify->add_option("--surface", surface, "a,b");
    verify->add_option("--from", from, "section data file to verify");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    set_min_embed_precision(precision);
    try {
        if (classify->parsed()) return cmd_classify(surface, format, emit_path);
        if (fundpoly->parsed()) return cmd_fundpoly(surface, format, emit_path);
        if (sections->parsed()) return cmd_sections(surface, format, emit_path);
        if (gramc->parsed()) return cmd_gram(surface, from, format, emit_path);
        if (assemble->parsed()) return cmd_assemble(data_dir, format, emit_path);
        if (verify->parsed()) return cmd_verify(from, surface);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMathFailure;
    }
    return kExitUsage;
}
