// Loaders for the bundled reference tables (data/table1.tsv, table2.tsv).
// Both files are transcriptions of published minima; a few rows carry flags
// where the printed values cannot be reproduced verbatim (see the file
// headers). The polynomial behind every row is reconstructible exactly.

#pragma once

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "househunter/factor.hpp"
#include "househunter/poly.hpp"
#include "househunter/poly_text.hpp"

namespace hh {

struct Table1Row {
    long d = 0;
    int nu_r = 0;
    double mrp = 0;
    std::string kind;    // "half" | "quot"
    std::string source;  // half-coefficient row or sparse numerator text
    CyclotomicSignature phi;
    std::vector<std::string> flags;

    bool has_flag(const std::string& f) const {
        for (const auto& x : flags)
            if (x == f || x.rfind(f + ":", 0) == 0) return true;
        return false;
    }

    // the exact extremal polynomial R_d
    IntPoly reconstruct() const {
        if (kind == "half") return decode_half(parse_half_string(source), d);
        IntPoly num = parse_monomial_string(source);
        auto q = num.divided_exactly_by(phi.product());
        if (!q) throw std::runtime_error("table1 row " + std::to_string(d) +
                                         ": denominator does not divide source");
        return *q;
    }
};

struct Table2Row {
    long d = 0;
    double mrp_pow_d = 0;  // printed from rounded mrp; ~1e-7 noise
    double min_div = 0;    // likewise
    double mr = 0;
    int nu = 0;
    std::string pd_kind;  // "power" | "half"
    std::string pd;       // "d0,k" or half-coefficient row
    std::vector<std::string> flags;

    bool has_flag(const std::string& f) const {
        for (const auto& x : flags)
            if (x == f || x.rfind(f + ":", 0) == 0) return true;
        return false;
    }

    bool is_primitive_row() const { return pd_kind == "half"; }

    // for power rows: (d0, k)
    std::pair<long, long> power_marker() const {
        auto comma = pd.find(',');
        return {std::stol(pd.substr(0, comma)), std::stol(pd.substr(comma + 1))};
    }
};

namespace fixturedetail {

inline std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : line) {
        if (ch == '\t') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    out.push_back(cur);
    return out;
}

inline std::vector<std::string> split_flags(const std::string& s) {
    std::vector<std::string> out;
    if (s == "-" || s.empty()) return out;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) out.push_back(tok);
    return out;
}

}  // namespace fixturedetail

inline std::string default_data_dir() {
    if (const char* env = std::getenv("HOUSEHUNTER_DATA")) return env;
#ifdef HOUSEHUNTER_DATA_DIR
    return HOUSEHUNTER_DATA_DIR;
#else
    return "data";
#endif
}

inline std::vector<Table1Row> load_table1(const std::string& dir = default_data_dir()) {
    std::ifstream in(dir + "/table1.tsv");
    if (!in) throw std::runtime_error("cannot open " + dir + "/table1.tsv");
    std::vector<Table1Row> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto f = fixturedetail::split_tabs(line);
        if (f.size() != 7) throw std::runtime_error("table1.tsv: bad row: " + line);
        Table1Row r;
        r.d = std::stol(f[0]);
        r.nu_r = std::stoi(f[1]);
        r.mrp = std::stod(f[2]);
        r.kind = f[3];
        r.source = f[4];
        r.phi = CyclotomicSignature::parse(f[5]);
        r.flags = fixturedetail::split_flags(f[6]);
        rows.push_back(std::move(r));
    }
    return rows;
}

inline std::vector<Table2Row> load_table2(const std::string& dir = default_data_dir()) {
    std::ifstream in(dir + "/table2.tsv");
    if (!in) throw std::runtime_error("cannot open " + dir + "/table2.tsv");
    std::vector<Table2Row> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto f = fixturedetail::split_tabs(line);
        if (f.size() != 8) throw std::runtime_error("table2.tsv: bad row: " + line);
        Table2Row r;
        r.d = std::stol(f[0]);
        r.mrp_pow_d = std::stod(f[1]);
        r.min_div = std::stod(f[2]);
        r.mr = std::stod(f[3]);
        r.nu = std::stoi(f[4]);
        r.pd_kind = f[5];
        r.pd = f[6];
        r.flags = fixturedetail::split_flags(f[7]);
        rows.push_back(std::move(r));
    }
    return rows;
}

}  // namespace hh
