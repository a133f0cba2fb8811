#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qha/op.hpp"
#include "qha/phase_fn.hpp"
#include "qha/signal.hpp"
#include "qha/tauber.hpp"

namespace qha {

// FNV-1a 64-bit hash, used to fingerprint configs inside reports.
uint64_t fnv1a64(std::string_view bytes);
std::string hex64(uint64_t v);

// Shortest-roundtrip decimal rendering of a double (printf %.17g), pinned
// so that identical runs produce byte-identical reports.
std::string format_double(double v);

// Minimal deterministic JSON emitter: field order is call order, doubles go
// through format_double, output is 2-space indented.  (A general-purpose
// JSON library is used for *parsing* configs; emission is pinned here
// because report bytes are part of the reproducibility contract.)
class JsonWriter {
  public:
    JsonWriter& begin_object();
    JsonWriter& end_object();
    JsonWriter& begin_array();
    JsonWriter& end_array();
    JsonWriter& key(const std::string& name);
    JsonWriter& value(double v);
    JsonWriter& value(int v);
    JsonWriter& value(uint64_t v);
    JsonWriter& value(bool v);
    JsonWriter& value(const char* v);
    JsonWriter& value(const std::string& v);
    JsonWriter& value(cdouble v);  // emitted as [re, im]
    const std::string& str() const { return buf_; }

  private:
    void separate();
    void newline();
    std::string buf_;
    std::vector<char> stack_;  // 'o' / 'a'
    std::vector<int> counts_;
    bool after_key_ = false;
};

// Value serialization.  JSON: {"n": n, "values": [[re, im], ...]} with
// entries in centered index order (signals: j = -n/2 .. n/2-1; 2D objects:
// row-major over centered (m, k) / (a, b)).  CSV: one line per entry,
// "j,re,im" for signals and "m,k,re,im" for 2D objects, same order.
std::string to_json(const Signal& psi);
std::string to_csv(const Signal& psi);
std::string to_json(const PhaseFn& f);
std::string to_csv(const PhaseFn& f);
std::string to_json(const OperatorMatrix& S);
std::string to_csv(const OperatorMatrix& S);
std::string to_csv(const SchattenSpectrum& s);  // "index,sigma"
std::string to_csv(const DecayProfile& p);      // "radius,value"

// Window factory shared by the CLI and the Tauberian runner: an atom name
// ("gaussian", "hermite(1)", ...) gives the rank-one projector onto that
// atom; "tau(x)" gives the quantizer operator S_x.
OperatorMatrix window_operator(const GridSpec& grid, const std::string& id);

// Tauberian diagnostics for one (mask, window) pair across grid sizes.
// The transfer residual is evaluated at the smallest n against a
// compatibility-projected random target and normalized by
// 1 + sup|f| * s1(T); cells carry the compact and decay profiles per n.
TauberReport run_tauber_report(const std::string& mask_id, const std::string& window_id,
                               cdouble A, const std::vector<int>& ns, uint64_t seed);
std::string to_json(const TauberReport& rep);
std::string to_csv(const TauberReport& rep);

// The identity suites behind `qha verify`: each suite returns its worst
// residual across the requested grid sizes and passes iff residual <= tol.
// tol_override replaces the built-in tolerance for matching suite names.
struct SuiteResult {
    std::string name;
    double residual = 0.0;
    double tol = 0.0;
    bool pass = false;
};
std::vector<SuiteResult> run_verify_suites(const std::vector<int>& ns, uint64_t seed,
                                           const std::map<std::string, double>& tol_override);

}  // namespace qha
