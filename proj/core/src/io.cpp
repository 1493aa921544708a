#include "mwl/io.hpp"

#include <json.hpp>

#include <cctype>
#include <fstream>
#include <sstream>

namespace mwl {

using nlohmann::json;
using nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// polynomial text syntax

namespace {

void append_monomial(std::string& out, const Rational& c,
                     const std::vector<std::pair<std::string, int>>& vars, bool first) {
    Rational a = c.abs();
    if (first) {
        if (c.sign() < 0) out += "-";
    } else {
        out += c.sign() < 0 ? " - " : " + ";
    }
    std::vector<std::string> pieces;
    if (!a.is_one() || vars.empty()) pieces.push_back(a.to_string());
    for (const auto& [v, e] : vars)
        pieces.push_back(e == 1 ? v : v + "^" + std::to_string(e));
    for (size_t i = 0; i < pieces.size(); ++i) {
        if (i) out += "*";
        out += pieces[i];
    }
}

}  // namespace

std::string to_text(const MultiPoly& p) {
    if (p.is_zero()) return "0";
    // descending lex term order
    std::string out;
    bool first = true;
    const auto& t = p.terms();
    for (auto it = t.rbegin(); it != t.rend(); ++it) {
        std::vector<std::pair<std::string, int>> vars;
        for (size_t i = 0; i < p.vars().size(); ++i)
            if (it->first[i] != 0) vars.push_back({p.vars()[i], it->first[i]});
        append_monomial(out, it->second, vars, first);
        first = false;
    }
    return out;
}

std::string to_text(const QPoly& p, const std::string& var) {
    return to_text(MultiPoly::from_qpoly(p, var));
}

std::string to_text(const Factorization& f, const std::string& var) {
    std::ostringstream os;
    if (!f.unit.is_one()) os << "(" << f.unit.to_string() << ")";
    bool first = f.unit.is_one();
    for (const auto& fac : f.factors) {
        if (!first || !f.unit.is_one()) os << " * ";
        os << "(" << to_text(fac.poly, var) << ")";
        if (fac.multiplicity != 1) os << "^" << fac.multiplicity;
        os << (fac.status == FactorStatus::ProvenIrreducible ? " [irreducible]"
                                                             : " [unresolved]");
        first = false;
    }
    return os.str();
}

namespace {

struct Lexer {
    std::string s;
    size_t i = 0;

    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        skip();
        return i >= s.size();
    }
    char peek() {
        skip();
        return i < s.size() ? s[i] : '\0';
    }
    char take() {
        skip();
        return s[i++];
    }
    std::string integer() {
        skip();
        size_t j = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == j) throw std::invalid_argument("poly parse: digit expected at '" +
                                                s.substr(j, 12) + "'");
        return s.substr(j, i - j);
    }
    std::string ident() {
        skip();
        size_t j = i;
        while (i < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
        if (i == j) throw std::invalid_argument("poly parse: identifier expected");
        return s.substr(j, i - j);
    }
};

MultiPoly parse_term(Lexer& lx) {
    MultiPoly acc(Rational(1));
    bool expect_factor = true;
    while (expect_factor) {
        char c = lx.peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = lx.integer();
            std::string den = "1";
            if (lx.peek() == '/') {
                lx.take();
                den = lx.integer();
            }
            acc = acc * MultiPoly(Rational(Integer(num), Integer(den)));
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string v = lx.ident();
            int e = 1;
            if (lx.peek() == '^') {
                lx.take();
                e = std::stoi(lx.integer());
            }
            acc = acc * MultiPoly::variable(v).pow(e);
        } else {
            throw std::invalid_argument("poly parse: unexpected character '" +
                                        std::string(1, c) + "'");
        }
        if (lx.peek() == '*') {
            lx.take();
        } else {
            expect_factor = false;
        }
    }
    return acc;
}

}  // namespace

MultiPoly multipoly_from_text(const std::string& s) {
    Lexer lx{s};
    MultiPoly acc;
    int sign = 1;
    if (lx.peek() == '-') {
        lx.take();
        sign = -1;
    } else if (lx.peek() == '+') {
        lx.take();
    }
    while (true) {
        MultiPoly t = parse_term(lx);
        acc += sign < 0 ? -t : t;
        if (lx.eof()) break;
        char c = lx.take();
        if (c == '+') sign = 1;
        else if (c == '-') sign = -1;
        else throw std::invalid_argument("poly parse: expected + or -");
    }
    return acc;
}

QPoly qpoly_from_text(const std::string& s, const std::string& var) {
    return multipoly_from_text(s).to_qpoly(var);
}

std::string TowerElement::to_string() const { return to_text(rep_); }

// ---------------------------------------------------------------------------
// JSON schemas

namespace {

ordered_json tower_to_json(const TowerPtr& tower) {
    ordered_json out = ordered_json::array();
    if (!tower) return out;
    for (const auto& l : tower->levels()) {
        ordered_json lvl;
        lvl["name"] = l.name;
        ordered_json mp = ordered_json::array();
        for (const auto& c : l.minpoly) mp.push_back(to_text(c));
        lvl["minpoly"] = mp;
        // widen the written radius to absorb the decimal rounding of re/im
        double rad = std::max(l.embedding.rad() * 2.0, 1e-48);
        std::ostringstream rs;
        rs << rad;
        lvl["embedding"] = {{"re", l.embedding.re().to_string(40)},
                            {"im", l.embedding.im().to_string(40)},
                            {"radius", rs.str()}};
        out.push_back(lvl);
    }
    return out;
}

TowerPtr tower_from_json(const json& arr) {
    TowerPtr t = FieldTower::rationals();
    for (const auto& lvl : arr) {
        std::string name = lvl.at("name").get<std::string>();
        std::vector<TowerElement> mp;
        for (const auto& c : lvl.at("minpoly"))
            mp.push_back(t->element(multipoly_from_text(c.get<std::string>())));
        const auto& e = lvl.at("embedding");
        CBall ball = CBall::from_strings(e.at("re").get<std::string>(),
                                         e.at("im").get<std::string>(),
                                         e.at("radius").get<std::string>(), 192);
        t = t->with_generic(name, mp, ball);
    }
    return t;
}

ordered_json laurent_to_json(const TLaurent& p) {
    ordered_json out = ordered_json::array();
    for (const auto& [e, c] : p.terms()) out.push_back({e, to_text(c.rep())});
    return out;
}

TLaurent laurent_from_json(const json& arr, const TowerPtr& tower) {
    TLaurent out;
    for (const auto& term : arr) {
        int e = term.at(0).get<int>();
        MultiPoly c = multipoly_from_text(term.at(1).get<std::string>());
        out = out + TLaurent::monomial(tower->element(c), e);
    }
    return out;
}

json surface_tag(const SurfaceModel& s) {
    if (s.is_master()) return "master";
    return json::array({s.a, s.b});
}

SurfaceModel surface_from_tag(const json& j) {
    if (j.is_string() && j.get<std::string>() == "master") return SurfaceModel::master();
    return SurfaceModel(j.at(0).get<int>(), j.at(1).get<int>());
}

}  // namespace

std::string sections_to_json(const SurfaceModel& surface, const std::vector<Section>& sections) {
    ordered_json out;
    out["schema"] = 1;
    out["surface"] = surface_tag(surface);
    TowerPtr tower;
    for (const auto& s : sections)
        if (s.tower) {
            if (tower && tower != s.tower)
                throw std::invalid_argument("sections_to_json: sections on different towers");
            tower = s.tower;
        }
    out["tower"] = tower_to_json(tower);
    ordered_json secs = ordered_json::array();
    for (const auto& s : sections) {
        ordered_json sec;
        sec["x"] = laurent_to_json(s.x);
        sec["y"] = laurent_to_json(s.y);
        sec["provenance"] = s.provenance;
        secs.push_back(sec);
    }
    out["sections"] = secs;
    return out.dump(2) + "\n";
}

std::vector<Section> sections_from_json(const std::string& text) {
    json j = json::parse(text);
    if (!j.contains("schema") || j.at("schema").get<int>() != 1)
        throw std::invalid_argument("section file: unsupported schema version");
    SurfaceModel surface = surface_from_tag(j.at("surface"));
    TowerPtr tower = tower_from_json(j.at("tower"));
    std::vector<Section> out;
    int idx = 0;
    for (const auto& sec : j.at("sections")) {
        Section q;
        q.surface = surface;
        q.tower = tower;
        q.x = laurent_from_json(sec.at("x"), tower);
        q.y = laurent_from_json(sec.at("y"), tower);
        q.provenance = sec.value("provenance", std::string("loaded-from-data"));
        if (!verify_section(q))
            throw std::runtime_error("section file: section " + std::to_string(idx) +
                                     " fails the Weierstrass identity on " + surface.name());
        out.push_back(std::move(q));
        ++idx;
    }
    return out;
}

std::vector<Section> ingest_sections(const std::string& path) {
    return sections_from_json(read_file(path));
}

void write_sections_file(const std::string& path, const SurfaceModel& surface,
                         const std::vector<Section>& sections) {
    write_file(path, sections_to_json(surface, sections));
}

std::string gram_to_json(const GramMatrix& g) {
    ordered_json out;
    out["size"] = g.rank();
    ordered_json rows = ordered_json::array();
    for (const auto& row : g.entries) {
        ordered_json r = ordered_json::array();
        for (const auto& e : row) r.push_back(e.to_string());
        rows.push_back(r);
    }
    out["entries"] = rows;
    out["det"] = det(g).to_string();
    return out.dump(2) + "\n";
}

std::string gram_to_text(const GramMatrix& g) {
    // aligned columns
    std::vector<std::vector<std::string>> cells;
    size_t width = 0;
    for (const auto& row : g.entries) {
        std::vector<std::string> r;
        for (const auto& e : row) {
            r.push_back(e.to_string());
            width = std::max(width, r.back().size());
        }
        cells.push_back(std::move(r));
    }
    std::ostringstream os;
    for (const auto& row : cells) {
        os << "[ ";
        for (const auto& c : row) os << std::string(width - c.size(), ' ') << c << " ";
        os << "]\n";
    }
    os << "det = " << det(g).to_string() << "\n";
    return os.str();
}

namespace {

ordered_json factorization_json(const std::map<Integer, int>& f) {
    ordered_json out = ordered_json::array();
    for (const auto& [p, e] : f) out.push_back({p.get_str(), e});
    return out;
}

std::string factorization_text(const std::map<Integer, int>& f) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, e] : f) {
        if (!first) os << " * ";
        os << p.get_str();
        if (e != 1) os << "^" << e;
        first = false;
    }
    if (first) os << "1";
    return os.str();
}

}  // namespace

std::string report_to_json(const MasterReport& r) {
    ordered_json out;
    out["points"] = ordered_json::array();
    for (const auto& p : r.points)
        out["points"].push_back(
            {{"index", p.index}, {"origin", p.origin}, {"verified", p.verified}});
    out["blocks"] = ordered_json::array();
    for (const auto& b : r.blocks.blocks)
        out["blocks"].push_back({{"label", b.label},
                                 {"scale", b.scale},
                                 {"rank", b.rank()},
                                 {"det", b.block_det().to_string()},
                                 {"fixture", b.fixture}});
    out["rank_sum"] = r.rank_sum;
    out["determinant"] = r.determinant.to_string();
    out["determinant_factorization"] = factorization_json(r.factorization);
    out["det_matches"] = r.det_matches;
    out["complete"] = r.complete;
    out["notes"] = r.notes;
    return out.dump(2) + "\n";
}

std::string report_to_text(const MasterReport& r) {
    std::ostringstream os;
    os << "Master surface Y^2 = X^3 + t^360 + 1\n";
    os << "points (" << r.points.size() << "):\n";
    for (const auto& p : r.points)
        os << "  P" << p.index << "  " << p.origin << "  "
           << (p.verified ? "verified" : "FAILED") << "\n";
    os << "blocks:\n";
    for (const auto& b : r.blocks.blocks)
        os << "  " << b.label << "  rank " << b.rank() << "  det "
           << b.block_det().to_string() << (b.fixture ? "  (fixture)" : "") << "\n";
    os << "rank sum = " << r.rank_sum << "\n";
    os << "det(M68) = " << r.determinant.to_string() << "\n";
    os << "         = " << factorization_text(r.factorization) << "\n";
    os << "matches 2^152 * 3^118 * 5^40: " << (r.det_matches ? "yes" : "NO") << "\n";
    for (const auto& n : r.notes) os << "note: " << n << "\n";
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f << content;
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace mwl
