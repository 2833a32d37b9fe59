#include "witt/session.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <fstream>
#include <sstream>

namespace witt {

using nlohmann::ordered_json;

const RingPtr& Session::ring(const std::string& name) const {
  auto it = rings.find(name);
  if (it == rings.end()) throw SessionError("session has no ring named '" + name + "'");
  return it->second;
}

namespace {

MonomialOrder order_from_name(const std::string& s) {
  if (s == "grevlex") return MonomialOrder::Grevlex;
  if (s == "lex") return MonomialOrder::Lex;
  throw SessionError("unknown monomial order '" + s + "'");
}

FieldKind kind_from_name(const std::string& s) {
  if (s == "untyped") return FieldKind::Untyped;
  if (s == "real") return FieldKind::Real;
  if (s == "complex") return FieldKind::Complex;
  throw SessionError("unknown field kind '" + s + "'");
}

// throws SessionError instead of nlohmann's type errors
template <class F>
auto shaped(const std::string& what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw SessionError("malformed " + what + ": " + e.what());
  }
}

std::vector<RingElement> elements_from_json(const ordered_json& j, const RingPtr& ring) {
  std::vector<RingElement> out;
  for (const auto& p : j) out.push_back(ring->element(poly_from_json(p, ring->vars(), ring->order())));
  return out;
}

ordered_json elements_to_json(const std::vector<RingElement>& v) {
  ordered_json a = ordered_json::array();
  for (const auto& x : v) a.push_back(poly_to_json(x.poly()));
  return a;
}

}  // namespace

ordered_json poly_to_json(const Polynomial& p) {
  ordered_json terms = ordered_json::array();
  for (const auto& t : p.terms()) {
    ordered_json jt;
    jt["e"] = t.mono.exps();
    Rational c = t.coeff;
    jt["n"] = c.get_num().get_str();
    jt["d"] = c.get_den().get_str();
    terms.push_back(std::move(jt));
  }
  return terms;
}

Polynomial poly_from_json(const ordered_json& j, const VarsPtr& vars, MonomialOrder ord) {
  return shaped("polynomial", [&] {
    std::vector<Term> terms;
    for (const auto& jt : j) {
      std::vector<std::uint32_t> exps = jt.at("e").get<std::vector<std::uint32_t>>();
      if (exps.size() != vars->size())
        throw SessionError("polynomial term arity does not match its ring");
      std::string n = jt.at("n").get<std::string>();
      std::string d = jt.at("d").get<std::string>();
      terms.push_back({Monomial(std::move(exps)), rat_from_string(n + "/" + d)});
    }
    return Polynomial::from_terms(vars, std::move(terms), ord);
  });
}

ordered_json matrix_to_json(const RingMatrix& m) {
  ordered_json jm;
  jm["rows"] = m.rows();
  jm["cols"] = m.cols();
  ordered_json entries = ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) entries.push_back(poly_to_json(m.at(r, c).poly()));
  jm["entries"] = entries;
  return jm;
}

RingMatrix matrix_from_json(const ordered_json& j, const RingPtr& ring) {
  return shaped("matrix", [&] {
    std::size_t rows = j.at("rows").get<std::size_t>();
    std::size_t cols = j.at("cols").get<std::size_t>();
    const auto& entries = j.at("entries");
    if (entries.size() != rows * cols) throw SessionError("matrix entry count mismatch");
    RingMatrix m(ring, rows, cols);
    std::size_t k = 0;
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c)
        m.set(r, c, ring->element(poly_from_json(entries[k++], ring->vars(), ring->order())));
    return m;
  });
}

ordered_json ring_to_json(const RingPtr& r) {
  ordered_json jr;
  jr["vars"] = *r->vars();
  jr["order"] = order_name(r->order());
  ordered_json rels = ordered_json::array();
  for (const auto& rel : r->relations()) rels.push_back(poly_to_json(rel));
  jr["relations"] = rels;
  ordered_json inv = ordered_json::array();
  for (const auto& i : r->inverted()) {
    ordered_json ji;
    ji["element"] = poly_to_json(i.element);
    ji["inverter_var"] = i.inverter_var;
    inv.push_back(std::move(ji));
  }
  jr["inverted"] = inv;
  return jr;
}

RingPtr ring_from_json(const ordered_json& j) {
  return shaped("ring", [&] {
    VarsPtr vars = make_vars(j.at("vars").get<VarList>());
    MonomialOrder ord = order_from_name(j.at("order").get<std::string>());
    std::vector<Polynomial> rels;
    for (const auto& jr : j.at("relations")) rels.push_back(poly_from_json(jr, vars, ord));
    std::vector<PresentedRing::Inverted> inv;
    if (j.contains("inverted"))
      for (const auto& ji : j.at("inverted"))
        inv.push_back({poly_from_json(ji.at("element"), vars, ord),
                       ji.at("inverter_var").get<std::size_t>()});
    return restore_ring(vars, std::move(rels), ord, std::move(inv));
  });
}

RingPtr restore_ring(VarsPtr vars, std::vector<Polynomial> relations, MonomialOrder ord,
                     std::vector<PresentedRing::Inverted> inverted) {
  RingPtr made = PresentedRing::make(vars, std::move(relations), ord);
  // make() allocates a mutable ring; sole owner here, so the cast is sound
  auto r = std::const_pointer_cast<PresentedRing>(made);
  std::vector<bool> flags(vars->size(), false);
  for (const auto& i : inverted) {
    if (i.inverter_var >= vars->size())
      throw SessionError("inverter index out of range");
    if (flags[i.inverter_var]) throw SessionError("duplicate inverter variable");
    flags[i.inverter_var] = true;
    Polynomial t = Polynomial::variable(vars, i.inverter_var, ord);
    Polynomial rel = t * i.element - Polynomial::constant(vars, Rational(1), ord);
    if (!r->nf(rel).is_zero())
      throw SessionError("inverter relation for variable '" + (*vars)[i.inverter_var] +
                         "' does not hold in the ring");
  }
  r->inverted_ = std::move(inverted);
  r->is_inverter_ = std::move(flags);
  return r;
}

ordered_json session_to_json(const Session& s) {
  ordered_json j;
  j["schema"] = kSessionSchema;
  j["metadata"] = {{"tool", s.tool}, {"default_order", order_name(s.default_order)}};
  ordered_json rings;
  for (const auto& [name, r] : s.rings) rings[name] = ring_to_json(r);
  j["rings"] = std::move(rings);

  ordered_json elements;
  for (const auto& [name, e] : s.elements)
    elements[name] = {{"ring", e.ring}, {"poly", poly_to_json(e.value.poly())}};
  j["elements"] = std::move(elements);

  ordered_json matrices;
  for (const auto& [name, m] : s.matrices) {
    ordered_json jm = matrix_to_json(m.value);
    ordered_json e;
    e["ring"] = m.ring;
    for (auto& [k, v] : jm.items()) e[k] = std::move(v);
    matrices[name] = std::move(e);
  }
  j["matrices"] = std::move(matrices);

  ordered_json rows;
  for (const auto& [name, r] : s.rows)
    rows[name] = {{"ring", r.ring},
                  {"v", elements_to_json(r.value.v)},
                  {"w", elements_to_json(r.value.w)}};
  j["rows"] = std::move(rows);

  ordered_json forms;
  for (const auto& [name, f] : s.forms) {
    ordered_json jf;
    jf["ring"] = f.ring;
    jf["frame"] = matrix_to_json(f.value.frame());
    if (f.value.module().rank)
      jf["rank"] = *f.value.module().rank;
    else
      jf["rank"] = nullptr;
    jf["gram"] = matrix_to_json(f.value.gram());
    jf["witness"] = matrix_to_json(f.value.witness());
    forms[name] = std::move(jf);
  }
  j["forms"] = std::move(forms);

  ordered_json cycles;
  for (const auto& [name, c] : s.cycles) {
    ordered_json comps = ordered_json::array();
    for (const auto& comp : c.value.components()) {
      ordered_json jc;
      jc["prime"] = elements_to_json(comp.prime);
      jc["unit"] = poly_to_json(comp.unit.poly());
      jc["frame"] = elements_to_json(comp.frame);
      jc["sign"] = comp.sign;
      comps.push_back(std::move(jc));
    }
    cycles[name] = {{"ring", c.ring}, {"components", std::move(comps)}};
  }
  j["cycles"] = std::move(cycles);

  ordered_json fields;
  for (const auto& [name, f] : s.fields) {
    ordered_json jf;
    jf["ring"] = f.ring;
    jf["prime"] = elements_to_json(f.value.prime());
    jf["kind"] = kind_name(f.value.kind());
    ordered_json consts = ordered_json::array();
    for (const auto& c : f.value.constants())
      consts.push_back({{"var", c.var}, {"minpoly", poly_to_json(c.minpoly)}});
    jf["constants"] = std::move(consts);
    fields[name] = std::move(jf);
  }
  j["fields"] = std::move(fields);
  return j;
}

Session session_from_json(const ordered_json& j) {
  return shaped("session", [&] {
    if (!j.is_object() || !j.contains("schema"))
      throw SessionError("not a wittcalc session document");
    std::string schema = j.at("schema").get<std::string>();
    if (schema != kSessionSchema)
      throw SessionError("schema version mismatch: found '" + schema + "', expected '" +
                         kSessionSchema + "'");
    Session s;
    if (j.contains("metadata")) {
      const auto& md = j.at("metadata");
      if (md.contains("tool")) s.tool = md.at("tool").get<std::string>();
      if (md.contains("default_order"))
        s.default_order = order_from_name(md.at("default_order").get<std::string>());
    }
    if (j.contains("rings"))
      for (const auto& [name, jr] : j.at("rings").items()) s.rings.emplace(name, ring_from_json(jr));

    auto ring_of = [&](const ordered_json& je) { return s.ring(je.at("ring").get<std::string>()); };

    if (j.contains("elements"))
      for (const auto& [name, je] : j.at("elements").items()) {
        RingPtr r = ring_of(je);
        s.elements.emplace(name, Over<RingElement>{je.at("ring").get<std::string>(),
                                                   r->element(poly_from_json(je.at("poly"), r->vars(), r->order()))});
      }
    if (j.contains("matrices"))
      for (const auto& [name, jm] : j.at("matrices").items()) {
        RingPtr r = ring_of(jm);
        s.matrices.emplace(name, Over<RingMatrix>{jm.at("ring").get<std::string>(),
                                                  matrix_from_json(jm, r)});
      }
    if (j.contains("rows"))
      for (const auto& [name, jr] : j.at("rows").items()) {
        RingPtr r = ring_of(jr);
        s.rows.emplace(name, Over<UnimodularRow>{jr.at("ring").get<std::string>(),
                                                 UnimodularRow(elements_from_json(jr.at("v"), r),
                                                               elements_from_json(jr.at("w"), r))});
      }
    if (j.contains("forms"))
      for (const auto& [name, jf] : j.at("forms").items()) {
        RingPtr r = ring_of(jf);
        std::optional<unsigned> rank;
        if (jf.contains("rank") && !jf.at("rank").is_null()) rank = jf.at("rank").get<unsigned>();
        FramedModule mod{r, matrix_from_json(jf.at("frame"), r), rank};
        s.forms.emplace(name,
                        Over<FramedAlternatingForm>{jf.at("ring").get<std::string>(),
                                                    FramedAlternatingForm(std::move(mod),
                                                                          matrix_from_json(jf.at("gram"), r),
                                                                          matrix_from_json(jf.at("witness"), r))});
      }
    if (j.contains("cycles"))
      for (const auto& [name, jc] : j.at("cycles").items()) {
        RingPtr r = ring_of(jc);
        std::vector<CycleComponent> comps;
        for (const auto& jcomp : jc.at("components"))
          comps.push_back({elements_from_json(jcomp.at("prime"), r),
                           r->element(poly_from_json(jcomp.at("unit"), r->vars(), r->order())),
                           elements_from_json(jcomp.at("frame"), r),
                           jcomp.at("sign").get<int>()});
        s.cycles.emplace(name, Over<FramedCycle>{jc.at("ring").get<std::string>(),
                                                 FramedCycle(r, std::move(comps))});
      }
    if (j.contains("fields"))
      for (const auto& [name, jf] : j.at("fields").items()) {
        RingPtr r = ring_of(jf);
        std::vector<FieldConstant> consts;
        if (jf.contains("constants"))
          for (const auto& jc : jf.at("constants"))
            consts.push_back({jc.at("var").get<std::string>(),
                              poly_from_json(jc.at("minpoly"), r->vars(), r->order())});
        s.fields.emplace(name, Over<PresentedField>{jf.at("ring").get<std::string>(),
                                                    PresentedField::make(r, elements_from_json(jf.at("prime"), r),
                                                                         kind_from_name(jf.at("kind").get<std::string>()),
                                                                         std::move(consts))});
      }
    return s;
  });
}

void save_session(const Session& s, const std::string& path) {
  std::string body = session_to_json(s).dump(2);
  body.push_back('\n');
  int fd = ::open(path.c_str(), O_WRONLY | O_CREAT, 0644);
  if (fd < 0) throw SessionError("cannot open '" + path + "' for writing");
  if (::flock(fd, LOCK_EX | LOCK_NB) != 0) {
    ::close(fd);
    throw SessionError("session file '" + path + "' is locked by another process");
  }
  bool ok = ::ftruncate(fd, 0) == 0;
  const char* p = body.data();
  std::size_t left = body.size();
  while (ok && left > 0) {
    ssize_t n = ::write(fd, p, left);
    if (n <= 0) ok = false;
    else {
      p += n;
      left -= static_cast<std::size_t>(n);
    }
  }
  ::close(fd);  // releases the lock
  if (!ok) throw SessionError("short write to '" + path + "'");
}

Session load_session(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SessionError("cannot open '" + path + "' for reading");
  std::stringstream buf;
  buf << in.rdbuf();
  ordered_json j;
  try {
    j = ordered_json::parse(buf.str());
  } catch (const nlohmann::json::exception& e) {
    throw SessionError("invalid JSON in '" + path + "': " + e.what());
  }
  return session_from_json(j);
}

}  // namespace witt
