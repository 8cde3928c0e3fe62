#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "udm/channel.hpp"
#include "udm/distribution.hpp"
#include "udm/mapping.hpp"

namespace udm {

/// Shortest decimal form that round-trips the double exactly.
inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline nlohmann::json mapping_to_json(const Mapping& m) {
    nlohmann::json j;
    j["n_bits"] = m.alphabet().n_bits;
    j["n_frac"] = m.alphabet().n_frac;
    j["encode"] = m.encode_table();
    return j;
}

inline Mapping mapping_from_json(const nlohmann::json& j) {
    const SymbolAlphabet a = make_alphabet(j.at("n_bits").get<int>(), j.at("n_frac").get<int>());
    std::vector<Label> enc = j.at("encode").get<std::vector<Label>>();
    return Mapping(a, std::move(enc));
}

inline void write_mapping_json(const std::string& path, const Mapping& m) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << mapping_to_json(m).dump(2) << '\n';
}

inline Mapping read_mapping_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    nlohmann::json j;
    in >> j;
    return mapping_from_json(j);
}

/// CSV writer: '#'-prefixed metadata lines, one header row, then data rows.
class CsvWriter {
  public:
    explicit CsvWriter(const std::string& path) : out_(path) {
        if (!out_) throw std::runtime_error("cannot write " + path);
    }

    void comment(const std::string& text) { out_ << "# " << text << '\n'; }

    void header(const std::vector<std::string>& columns) { row_strings(columns); }

    void row_strings(const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out_ << ',';
            out_ << cells[i];
        }
        out_ << '\n';
    }

    std::ofstream& stream() { return out_; }

  private:
    std::ofstream out_;
};

inline void write_crossover_csv(const std::string& path, const CrossoverMatrix& m,
                                const std::string& config_echo) {
    CsvWriter csv(path);
    csv.comment(config_echo);
    const int k = m.size();
    std::vector<std::string> cells(k);
    for (int j = 0; j < k; ++j) cells[j] = "to_" + std::to_string(j);
    csv.header(cells);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j)
            cells[j] = format_double(m(static_cast<Label>(i), static_cast<Label>(j)));
        csv.row_strings(cells);
    }
}

inline void write_pmf_csv(const std::string& path, const SymbolDistribution& dist,
                          const std::string& config_echo) {
    CsvWriter csv(path);
    csv.comment(config_echo);
    csv.header({"symbol", "probability"});
    for (int k = 0; k < dist.size(); ++k)
        csv.row_strings({format_double(dist.alphabet().symbols[k]), format_double(dist[k])});
}

inline void write_recode_csv(const std::string& path, const RecodePair& rp,
                             const std::string& config_echo) {
    CsvWriter csv(path);
    csv.comment(config_echo);
    csv.header({"input_label", "output_label"});
    for (std::size_t l = 0; l < rp.forward.size(); ++l)
        csv.row_strings({std::to_string(l), std::to_string(rp.forward[l])});
}

/// Reads a (symbol, probability) CSV into a distribution over the alphabet.
/// Symbols must appear in alphabet order; '#' lines and the header are
/// skipped.
inline SymbolDistribution read_pmf_csv(const std::string& path, const SymbolAlphabet& alphabet) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::vector<double> pmf;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        std::string sym, prob;
        if (!std::getline(ss, sym, ',') || !std::getline(ss, prob, ',')) continue;
        try {
            const double d = std::stod(sym);
            const double p = std::stod(prob);
            const std::size_t k = pmf.size();
            if (k >= alphabet.symbols.size())
                throw std::runtime_error("too many rows");
            if (std::abs(d - alphabet.symbols[k]) > 1e-9)
                throw std::runtime_error("symbol " + sym + " out of order for this alphabet");
            pmf.push_back(p);
        } catch (const std::invalid_argument&) {
            continue;  // header row
        }
    }
    if (pmf.size() != alphabet.symbols.size())
        throw std::runtime_error(path + ": expected " + std::to_string(alphabet.symbols.size()) +
                                 " rows, got " + std::to_string(pmf.size()));
    return SymbolDistribution(alphabet, std::move(pmf));
}

/// Compact space-separated encode table, e.g. "4 5 6 7 0 1 2 3".
inline std::string encode_table_string(const std::vector<Label>& enc) {
    std::string s;
    for (std::size_t i = 0; i < enc.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(enc[i]);
    }
    return s;
}

}  // namespace udm
