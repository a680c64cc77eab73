#pragma once

#include "qca/seed.hpp"

#include <istream>
#include <sstream>
#include <string>
#include <vector>

namespace qca {

/// Serialized seed: names, mutable row indices, B and L row major.  The
/// q_half_exponents flag documents that any serialized scalar exponents
/// count q^(1/2) units; it does not change parsing.
struct SeedFile {
    QuantumSeed seed;
    bool q_half_exponents = true;
};

inline SeedFile parse_seed_file(std::istream& in) {
    std::vector<std::string> names;
    std::vector<int> mutable_rows;
    std::vector<std::int64_t> b_entries, l_entries;
    int b_rows = 0, l_rows = 0;
    bool have_names = false, have_mutable = false, have_b = false, have_l = false;
    bool q_half = true;

    std::string line;
    int lineno = 0;
    enum class Section { None, B, L } section = Section::None;

    auto fail = [&](const std::string& msg) {
        throw validation_error("seed file line " + std::to_string(lineno) + ": " + msg);
    };

    while (std::getline(in, line)) {
        lineno++;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;

        if (first == "names:") {
            std::string n;
            while (ls >> n) names.push_back(n);
            have_names = true;
            section = Section::None;
        } else if (first == "mutable:") {
            int idx;
            while (ls >> idx) mutable_rows.push_back(idx);
            if (!ls.eof()) fail("mutable: expects integer row indices");
            have_mutable = true;
            section = Section::None;
        } else if (first == "q_half_exponents:") {
            std::string v;
            ls >> v;
            if (v != "true" && v != "false") fail("q_half_exponents: expects true or false");
            q_half = (v == "true");
            section = Section::None;
        } else if (first == "B:") {
            section = Section::B;
            have_b = true;
        } else if (first == "L:") {
            section = Section::L;
            have_l = true;
        } else if (section != Section::None) {
            std::istringstream row(line);
            std::vector<std::int64_t>& out = section == Section::B ? b_entries : l_entries;
            int& rows = section == Section::B ? b_rows : l_rows;
            std::int64_t v;
            int count = 0;
            while (row >> v) {
                out.push_back(v);
                count++;
            }
            if (!row.eof()) fail("matrix rows must contain integers");
            if (count == 0) continue;
            rows++;
        } else {
            fail("unrecognized line '" + line + "'");
        }
    }

    if (!have_names || names.empty()) throw validation_error("seed file: missing names");
    if (!have_mutable) throw validation_error("seed file: missing mutable row list");
    if (!have_l) throw validation_error("seed file: missing L matrix");
    const int m = static_cast<int>(names.size());
    const int n = static_cast<int>(mutable_rows.size());
    if (n > 0 && !have_b) throw validation_error("seed file: missing B matrix");
    if (have_b && b_rows != m && !(n == 0 && b_rows == 0))
        throw validation_error("seed file: B must have one row per name (got " +
                               std::to_string(b_rows) + " rows for " + std::to_string(m) + " names)");
    if (static_cast<int>(b_entries.size()) != m * n)
        throw validation_error("seed file: B must be " + std::to_string(m) + "x" + std::to_string(n));
    if (l_rows != m || static_cast<int>(l_entries.size()) != m * m)
        throw validation_error("seed file: L must be " + std::to_string(m) + "x" + std::to_string(m));

    SeedFile f;
    f.q_half_exponents = q_half;
    f.seed = make_seed(std::move(names), ExchangeMatrix(IntMat(m, n, std::move(b_entries)), std::move(mutable_rows)),
                       QuasiCommutationMatrix(IntMat(m, m, std::move(l_entries))));
    return f;
}

inline SeedFile parse_seed_file(const std::string& text) {
    std::istringstream in(text);
    return parse_seed_file(in);
}

inline std::string write_seed_file(const QuantumSeed& seed, bool q_half_exponents = true) {
    std::ostringstream os;
    os << "names:";
    for (const auto& n : seed.names) os << " " << n;
    os << "\nmutable:";
    for (int r : seed.B.mutable_rows) os << " " << r;
    os << "\n";
    if (seed.mutable_count() > 0) {
        os << "B:\n";
        for (int i = 0; i < seed.var_count(); i++) {
            for (int j = 0; j < seed.mutable_count(); j++) os << (j ? " " : "") << seed.B.mat.at(i, j);
            os << "\n";
        }
    }
    os << "L:\n";
    for (int i = 0; i < seed.var_count(); i++) {
        for (int j = 0; j < seed.var_count(); j++) os << (j ? " " : "") << seed.L.at(i, j);
        os << "\n";
    }
    os << "q_half_exponents: " << (q_half_exponents ? "true" : "false") << "\n";
    return os.str();
}

} // namespace qca
