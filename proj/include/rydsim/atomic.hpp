#pragma once

#include <map>
#include <string>

namespace rydsim {

// A Rydberg level |n, L, j, mj>. j and mj are half-integers.
struct RydbergState {
    int n = 0;
    int L = 0;
    double j = 0.0;
    double mj = 0.0;
    std::string species = "Rb85";

    RydbergState() = default;
    RydbergState(int n, int L, double j, double mj, std::string species = "Rb85");

    bool operator==(const RydbergState& o) const {
        return n == o.n && L == o.L && j == o.j && mj == o.mj;
    }
    bool operator<(const RydbergState& o) const;

    std::string label() const; // e.g. "49p3/2(mj=1/2)"
};

// Rydberg-Ritz coefficients per (L, j) series plus the species Rydberg
// constant. Loaded from a plain-text table; see data/rb_quantum_defects.txt.
class QuantumDefectTable {
public:
    struct Series {
        double delta0 = 0.0;
        double delta2 = 0.0;
    };

    // Hydrogenic table: all defects zero, given Rydberg constant.
    static QuantumDefectTable hydrogenic(double rydberg_ghz);

    // Parses the strict text format. Throws ConfigError on any malformed row.
    static QuantumDefectTable load(const std::string& path);
    static QuantumDefectTable parse(const std::string& text, const std::string& origin);

    double rydberg_ghz() const { return rydberg_ghz_; }

    bool has(int L, double j) const;
    const Series& series(int L, double j) const; // throws ConfigError if absent

    // n* = n - delta0 - delta2 / (n - delta0)^2
    double effective_n(const RydbergState& s) const;

private:
    double rydberg_ghz_ = 0.0;
    bool hydrogenic_ = false;
    std::map<std::pair<int, int>, Series> series_; // key (L, 2j)
};

// Rydberg-Ritz energy -Ry/n*^2 in GHz relative to the ionization limit.
double energy_level(const RydbergState& state, const QuantumDefectTable& defects);

} // namespace rydsim
