#include "rydsim/atomic.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "rydsim/errors.hpp"

namespace rydsim {

namespace {

const char* l_letter(int L) {
    static const char* letters[] = {"s", "p", "d", "f", "g", "h", "i"};
    return L >= 0 && L < 7 ? letters[L] : "?";
}

int doubled_half_integer(double x, const char* what) {
    const int r = static_cast<int>(std::lround(2.0 * x));
    if (std::abs(2.0 * x - r) > 1e-9)
        throw DomainError(std::string(what) + " must be a half-integer");
    return r;
}

} // namespace

RydbergState::RydbergState(int n_, int L_, double j_, double mj_, std::string species_)
    : n(n_), L(L_), j(j_), mj(mj_), species(std::move(species_)) {
    if (n < 1) throw DomainError("n must be >= 1");
    if (L < 0 || L >= n) throw DomainError("need 0 <= L < n");
    const int tj = doubled_half_integer(j, "j");
    const int tmj = doubled_half_integer(mj, "mj");
    if (tj % 2 == 0) throw DomainError("j must be half-integral for a one-electron state");
    if (std::abs(2 * L - 1) > tj || tj > 2 * L + 1)
        throw DomainError("need |L - 1/2| <= j <= L + 1/2");
    if (std::abs(tmj) > tj) throw DomainError("need |mj| <= j");
    if ((tmj % 2 + 2) % 2 != (tj % 2 + 2) % 2) throw DomainError("mj must differ from j by an integer");
}

bool RydbergState::operator<(const RydbergState& o) const {
    if (n != o.n) return n < o.n;
    if (L != o.L) return L < o.L;
    if (j != o.j) return j < o.j;
    return mj < o.mj;
}

std::string RydbergState::label() const {
    std::ostringstream os;
    os << n << l_letter(L) << static_cast<int>(std::lround(2 * j)) << "/2";
    os << "(mj=" << static_cast<int>(std::lround(2 * mj)) << "/2)";
    return os.str();
}

QuantumDefectTable QuantumDefectTable::hydrogenic(double rydberg_ghz) {
    QuantumDefectTable t;
    t.rydberg_ghz_ = rydberg_ghz;
    t.hydrogenic_ = true;
    return t;
}

QuantumDefectTable QuantumDefectTable::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open quantum-defect table: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str(), path);
}

QuantumDefectTable QuantumDefectTable::parse(const std::string& text, const std::string& origin) {
    QuantumDefectTable t;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool have_ry = false;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream row(line);
        std::string first;
        if (!(row >> first)) continue; // blank
        const std::string where = origin + ":" + std::to_string(lineno);

        if (first == "rydberg_constant_GHz") {
            if (!(row >> t.rydberg_ghz_) || t.rydberg_ghz_ <= 0)
                throw ConfigError(where + ": bad rydberg_constant_GHz value");
            have_ry = true;
            continue;
        }

        int L = 0, twoj = 0;
        Series s;
        try {
            L = std::stoi(first);
        } catch (const std::exception&) {
            throw ConfigError(where + ": unknown row '" + first + "'");
        }
        if (!(row >> twoj >> s.delta0 >> s.delta2))
            throw ConfigError(where + ": expected 'L 2j delta0 delta2 [comment]'");
        std::string rest;
        std::getline(row, rest); // trailing comment text, ignored
        if (L < 0 || twoj < 1 || std::abs(twoj - 2 * L) != 1)
            throw ConfigError(where + ": inconsistent (L, 2j) pair");
        if (!t.series_.emplace(std::make_pair(L, twoj), s).second)
            throw ConfigError(where + ": duplicate (L, j) series");
    }
    if (!have_ry) throw ConfigError(origin + ": missing rydberg_constant_GHz row");
    if (t.series_.empty()) throw ConfigError(origin + ": no defect series found");
    return t;
}

bool QuantumDefectTable::has(int L, double j) const {
    if (hydrogenic_) return true;
    return series_.count({L, static_cast<int>(std::lround(2 * j))}) > 0;
}

const QuantumDefectTable::Series& QuantumDefectTable::series(int L, double j) const {
    static const Series zero{};
    if (hydrogenic_) return zero;
    const auto it = series_.find({L, static_cast<int>(std::lround(2 * j))});
    if (it == series_.end()) {
        std::ostringstream os;
        os << "no quantum-defect entry for series (L=" << L << ", j=" << j << ")";
        throw ConfigError(os.str());
    }
    return it->second;
}

double QuantumDefectTable::effective_n(const RydbergState& s) const {
    const Series& ser = series(s.L, s.j);
    const double base = s.n - ser.delta0;
    const double nstar = base - ser.delta2 / (base * base);
    if (!(nstar > 0)) throw DomainError("effective quantum number not positive for " + s.label());
    return nstar;
}

double energy_level(const RydbergState& state, const QuantumDefectTable& defects) {
    const double nstar = defects.effective_n(state);
    return -defects.rydberg_ghz() / (nstar * nstar);
}

} // namespace rydsim
