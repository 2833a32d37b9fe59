#pragma once

#include <map>
#include <string>

#include "json.hpp"
#include "witt/cycles.hpp"
#include "witt/forms.hpp"

namespace witt {

inline constexpr const char* kToolVersion = "wittcalc 0.1.0";
inline constexpr const char* kSessionSchema = "wittcalc-session/1";

// An entry living over a named ring of the same session.
template <class T>
struct Over {
  std::string ring;
  T value;
};

// Named store of objects over named rings. Loading resolves every ring
// reference and re-validates each object through its ordinary constructor,
// so a tampered file fails with the same errors as bad in-process data.
struct Session {
  std::string tool = kToolVersion;
  MonomialOrder default_order = MonomialOrder::Grevlex;

  std::map<std::string, RingPtr> rings;
  std::map<std::string, Over<RingElement>> elements;
  std::map<std::string, Over<RingMatrix>> matrices;
  std::map<std::string, Over<UnimodularRow>> rows;
  std::map<std::string, Over<FramedAlternatingForm>> forms;
  std::map<std::string, Over<FramedCycle>> cycles;
  std::map<std::string, Over<PresentedField>> fields;

  const RingPtr& ring(const std::string& name) const;  // SessionError if absent
};

// Serialization: deterministic key order; polynomials as ordered term lists
// (exponent vector, numerator, denominator as decimal strings); matrices
// row-major; rings as generator lists plus order tag and localization data.
nlohmann::ordered_json session_to_json(const Session& s);
Session session_from_json(const nlohmann::ordered_json& j);  // SessionError on schema mismatch

// JSON building blocks, shared with the CLI's --json output.
nlohmann::ordered_json poly_to_json(const Polynomial& p);
Polynomial poly_from_json(const nlohmann::ordered_json& j, const VarsPtr& vars, MonomialOrder ord);
nlohmann::ordered_json matrix_to_json(const RingMatrix& m);
RingMatrix matrix_from_json(const nlohmann::ordered_json& j, const RingPtr& ring);
nlohmann::ordered_json ring_to_json(const RingPtr& r);
RingPtr ring_from_json(const nlohmann::ordered_json& j);

// Save takes an exclusive advisory lock on the file (flock) and fails with
// SessionError rather than block when another process holds it.
void save_session(const Session& s, const std::string& path);
Session load_session(const std::string& path);

}  // namespace witt
