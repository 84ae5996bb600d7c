#include "normax/io.hpp"

#include <fstream>
#include <sstream>

#include "normax/errors.hpp"

namespace normax {
namespace {

// Strips '#' comments, splits into whitespace tokens tagged with line numbers.
std::vector<std::pair<std::string, std::size_t>> tokenize(const std::string& text) {
    std::vector<std::pair<std::string, std::size_t>> toks;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) toks.emplace_back(tok, line_no);
    }
    return toks;
}

}  // namespace

AnyPolytope parse_polytope(const std::string& text) {
    auto toks = tokenize(text);
    std::size_t pos = 0;
    auto next = [&](const char* what) -> const std::pair<std::string, std::size_t>& {
        if (pos >= toks.size()) {
            std::size_t ln = toks.empty() ? 1 : toks.back().second;
            throw ParseError(std::string("unexpected end of input, expected ") + what, ln);
        }
        return toks[pos++];
    };

    const auto& kind = next("'H' or 'V'");
    if (kind.first != "H" && kind.first != "V")
        throw ParseError("expected 'H' or 'V', got '" + kind.first + "'", kind.second);

    auto parse_count = [&](const char* what) -> std::size_t {
        const auto& t = next(what);
        try {
            long v = std::stol(t.first);
            if (v < 0) throw std::invalid_argument("negative");
            return static_cast<std::size_t>(v);
        } catch (const std::exception&) {
            throw ParseError(std::string("bad ") + what + ": '" + t.first + "'", t.second);
        }
    };
    const std::size_t d = parse_count("dimension");
    const std::size_t n = parse_count("row count");
    if (d == 0) throw ParseError("dimension must be positive", toks[1].second);

    auto parse_rat = [&]() -> Rational {
        const auto& t = next("rational");
        try {
            return parse_rational(t.first);
        } catch (const std::exception& e) {
            throw ParseError(e.what(), t.second);
        }
    };

    AnyPolytope out;
    if (kind.first == "H") {
        HPolytope P;
        P.dim = d;
        P.rows.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            HRow r;
            r.normal.resize(d);
            for (std::size_t j = 0; j < d; ++j) r.normal[j] = parse_rat();
            r.rhs = parse_rat();
            P.rows.push_back(std::move(r));
        }
        out = std::move(P);
    } else {
        VPolytope P;
        P.dim = d;
        P.points.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            RatVec pt(d);
            for (std::size_t j = 0; j < d; ++j) pt[j] = parse_rat();
            P.points.push_back(std::move(pt));
        }
        if (P.points.empty()) throw ParseError("V-polytope needs at least one point", toks[0].second);
        out = std::move(P);
    }
    if (pos != toks.size())
        throw ParseError("trailing input: '" + toks[pos].first + "'", toks[pos].second);
    return out;
}

HPolytope parse_hpolytope(const std::string& text) {
    auto p = parse_polytope(text);
    if (!std::holds_alternative<HPolytope>(p)) throw Error("expected an H-polytope");
    return std::get<HPolytope>(std::move(p));
}

VPolytope parse_vpolytope(const std::string& text) {
    auto p = parse_polytope(text);
    if (!std::holds_alternative<VPolytope>(p)) throw Error("expected a V-polytope");
    return std::get<VPolytope>(std::move(p));
}

std::string serialize_polytope(const HPolytope& P) {
    std::ostringstream out;
    out << "H " << P.dim << " " << P.rows.size() << "\n";
    for (const auto& r : P.rows) {
        for (const auto& x : r.normal) out << to_string(x) << " ";
        out << to_string(r.rhs) << "\n";
    }
    return out.str();
}

std::string serialize_polytope(const VPolytope& P) {
    std::ostringstream out;
    out << "V " << P.dim << " " << P.points.size() << "\n";
    for (const auto& pt : P.points) {
        for (std::size_t j = 0; j < pt.size(); ++j)
            out << to_string(pt[j]) << (j + 1 == pt.size() ? "" : " ");
        out << "\n";
    }
    return out.str();
}

AnyPolytope read_polytope_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_polytope(ss.str());
}

}  // namespace normax
