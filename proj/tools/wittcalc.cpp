// wittcalc: exact computations in presented rings, alternating forms and
// framed cycles. Exit codes: 0 success/pass, 1 verdict failure, 2 usage or
// input error, 3 internal invariant violation.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "witt/scenarios.hpp"

namespace {

using namespace witt;
using nlohmann::ordered_json;

struct Common {
  std::string session_path;
  std::string order = "grevlex";
  bool json = false;
  std::vector<std::string> vars;
  std::vector<std::string> rels;
  std::string ring_name;

  std::optional<Session> session;
};

MonomialOrder parse_order(const std::string& s) {
  if (s == "grevlex") return MonomialOrder::Grevlex;
  if (s == "lex") return MonomialOrder::Lex;
  throw SessionError("unknown order '" + s + "' (expected grevlex or lex)");
}

FieldKind parse_kind(const std::string& s) {
  if (s == "untyped") return FieldKind::Untyped;
  if (s == "real") return FieldKind::Real;
  if (s == "complex") return FieldKind::Complex;
  throw SessionError("unknown field kind '" + s + "' (expected untyped, real or complex)");
}

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--session", c.session_path, "session JSON file to read objects from");
  sub->add_option("--order", c.order, "monomial order for ad-hoc rings (grevlex|lex)")
      ->check(CLI::IsMember({"grevlex", "lex"}));
  sub->add_flag("--json", c.json, "machine-readable output");
}

void add_ring_spec(CLI::App* sub, Common& c) {
  sub->add_option("--vars", c.vars, "comma-separated variable names for an ad-hoc ring")
      ->delimiter(',');
  sub->add_option("--rel", c.rels, "relation (repeatable) for an ad-hoc ring");
  sub->add_option("--ring", c.ring_name, "named ring from the session");
}

Session& need_session(Common& c) {
  if (!c.session) {
    if (c.session_path.empty()) throw SessionError("this command needs --session");
    c.session = load_session(c.session_path);
  }
  return *c.session;
}

RingPtr resolve_ring(Common& c) {
  if (!c.ring_name.empty()) return need_session(c).ring(c.ring_name);
  if (c.vars.empty()) throw SessionError("specify a ring: --vars/--rel or --session + --ring");
  return PresentedRing::make(c.vars, c.rels, parse_order(c.order));
}

template <class Map>
const typename Map::mapped_type& find_in(const Map& m, const std::string& name,
                                         const std::string& what) {
  auto it = m.find(name);
  if (it == m.end()) throw SessionError("session has no " + what + " named '" + name + "'");
  return it->second;
}

std::vector<RingElement> parse_row(const RingPtr& ring, const std::vector<std::string>& exprs) {
  std::vector<RingElement> out;
  for (const auto& e : exprs) out.push_back(ring->element(e));
  return out;
}

RingMatrix parse_matrix_literal(const RingPtr& ring, const std::string& lit) {
  std::vector<std::vector<RingElement>> rows;
  std::size_t pos = 0;
  while (pos <= lit.size()) {
    std::size_t semi = lit.find(';', pos);
    std::string rowtxt = lit.substr(pos, semi == std::string::npos ? semi : semi - pos);
    std::vector<RingElement> row;
    std::size_t p = 0;
    while (p <= rowtxt.size()) {
      std::size_t comma = rowtxt.find(',', p);
      row.push_back(ring->element(rowtxt.substr(p, comma == std::string::npos ? comma : comma - p)));
      if (comma == std::string::npos) break;
      p = comma + 1;
    }
    rows.push_back(std::move(row));
    if (semi == std::string::npos) break;
    pos = semi + 1;
  }
  return RingMatrix::from_rows(ring, std::move(rows));
}

ordered_json row_json(const std::vector<RingElement>& v) {
  ordered_json a = ordered_json::array();
  for (const auto& x : v) a.push_back(x.to_string());
  return a;
}

ordered_json matrix_json_strings(const RingMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(row_json(m.row(r)));
  return rows;
}

void emit(const Common& c, const ordered_json& j, const std::string& human) {
  if (c.json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << human;
}

std::string cycle_human(const FramedCycle& cyc) {
  std::string s;
  for (std::size_t i = 0; i < cyc.components().size(); ++i) {
    const auto& comp = cyc.components()[i];
    s += "component[" + std::to_string(i) + "]: sign " + (comp.sign > 0 ? "+1" : "-1");
    s += " prime (";
    for (std::size_t k = 0; k < comp.prime.size(); ++k)
      s += (k ? ", " : "") + comp.prime[k].to_string();
    s += ") unit " + comp.unit.to_string() + " frame Kos(";
    for (std::size_t k = 0; k < comp.frame.size(); ++k)
      s += (k ? ", " : "") + comp.frame[k].to_string();
    s += ")\n";
  }
  if (cyc.components().empty()) s = "zero cycle\n";
  return s;
}

ordered_json cycle_json(const FramedCycle& cyc) {
  ordered_json comps = ordered_json::array();
  for (const auto& comp : cyc.components()) {
    ordered_json jc;
    jc["prime"] = row_json(comp.prime);
    jc["unit"] = comp.unit.to_string();
    jc["frame"] = row_json(comp.frame);
    jc["sign"] = comp.sign;
    comps.push_back(std::move(jc));
  }
  return comps;
}

PresentedField field_from_flags(const RingPtr& ring, const std::vector<std::string>& prime_exprs,
                                const std::string& kind,
                                const std::vector<std::string>& constant_specs) {
  std::vector<FieldConstant> consts;
  for (const auto& spec : constant_specs) {
    auto eq = spec.find('=');
    if (eq == std::string::npos)
      throw SessionError("--constant expects var=minpoly, got '" + spec + "'");
    consts.push_back({spec.substr(0, eq),
                      parse_polynomial(spec.substr(eq + 1), ring->vars(), ring->order())});
  }
  return PresentedField::make(ring, parse_row(ring, prime_exprs), parse_kind(kind),
                              std::move(consts));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"wittcalc: exact presented-ring, alternating-form and framed-cycle calculator"};
  app.require_subcommand(1);
  int rc = 0;

  // ---- gb ----
  auto c_gb = std::make_shared<Common>();
  auto gb_gens = std::make_shared<std::vector<std::string>>();
  CLI::App* gb = app.add_subcommand("gb", "reduced Groebner basis of relations (+ extra generators)");
  add_common(gb, *c_gb);
  add_ring_spec(gb, *c_gb);
  gb->add_option("--gen", *gb_gens, "extra ideal generator (repeatable)");
  gb->callback([&rc, c_gb, gb_gens] {
    RingPtr ring = resolve_ring(*c_gb);
    const GroebnerBasis* basis = &ring->gb();
    GroebnerBasis extended(ring->gb());
    if (!gb_gens->empty()) {
      std::vector<Polynomial> gens = ring->relations();
      for (const auto& e : *gb_gens) gens.push_back(parse_polynomial(e, ring->vars(), ring->order()));
      extended = buchberger(ring->vars(), gens, ring->order());
      basis = &extended;
    }
    ordered_json j;
    j["trivial"] = basis->is_trivial();
    ordered_json b = ordered_json::array();
    std::string human;
    for (std::size_t i = 0; i < basis->gens().size(); ++i) {
      b.push_back(basis->gens()[i].to_string());
      human += "gb[" + std::to_string(i) + "] = " + basis->gens()[i].to_string() + "\n";
    }
    j["basis"] = b;
    if (basis->is_trivial()) human += "trivial: ideal contains 1\n";
    emit(*c_gb, j, human);
    rc = 0;
  });

  // ---- nf ----
  auto c_nf = std::make_shared<Common>();
  auto nf_expr = std::make_shared<std::string>();
  CLI::App* nf = app.add_subcommand("nf", "normal form of an expression modulo the ring relations");
  add_common(nf, *c_nf);
  add_ring_spec(nf, *c_nf);
  nf->add_option("--expr", *nf_expr, "expression to reduce")->required();
  nf->callback([&rc, c_nf, nf_expr] {
    RingPtr ring = resolve_ring(*c_nf);
    RingElement x = ring->element(*nf_expr);
    ordered_json j;
    j["nf"] = x.to_string();
    j["is_zero"] = x.is_zero();
    emit(*c_nf, j, "nf = " + x.to_string() + "\n");
    rc = 0;
  });

  // ---- check-unimodular ----
  auto c_um = std::make_shared<Common>();
  auto um_entries = std::make_shared<std::vector<std::string>>();
  CLI::App* um = app.add_subcommand("check-unimodular", "decide unimodularity and print a cofactor witness");
  add_common(um, *c_um);
  add_ring_spec(um, *c_um);
  um->add_option("--entry", *um_entries, "row entry (repeatable; use --entry=EXPR for leading '-')")
      ->required();
  um->callback([&rc, c_um, um_entries] {
    RingPtr ring = resolve_ring(*c_um);
    auto row = check_unimodular(ring, parse_row(ring, *um_entries));
    ordered_json j;
    j["unimodular"] = row.has_value();
    std::string human;
    if (row) {
      j["witness"] = row_json(row->w);
      human += "unimodular: yes\n";
      for (std::size_t i = 0; i < row->w.size(); ++i)
        human += "w[" + std::to_string(i) + "] = " + row->w[i].to_string() + "\n";
    } else {
      human += "unimodular: no\n";
    }
    emit(*c_um, j, human);
    rc = row ? 0 : 1;
  });

  // ---- symplectic-check ----
  auto c_sp = std::make_shared<Common>();
  auto sp_name = std::make_shared<std::string>();
  auto sp_lit = std::make_shared<std::string>();
  CLI::App* sp = app.add_subcommand("symplectic-check", "check M^T J M == J");
  add_common(sp, *c_sp);
  add_ring_spec(sp, *c_sp);
  sp->add_option("--matrix", *sp_name, "named matrix from the session");
  sp->add_option("--literal", *sp_lit, "matrix literal rows 'a,b;c,d' over the ad-hoc ring");
  sp->callback([&rc, c_sp, sp_name, sp_lit] {
    RingMatrix m;
    if (!sp_name->empty()) {
      Session& s = need_session(*c_sp);
      m = find_in(s.matrices, *sp_name, "matrix").value;
    } else if (!sp_lit->empty()) {
      m = parse_matrix_literal(resolve_ring(*c_sp), *sp_lit);
    } else {
      throw SessionError("symplectic-check needs --matrix or --literal");
    }
    bool ok = is_symplectic(m);
    ordered_json j;
    j["symplectic"] = ok;
    emit(*c_sp, j, std::string("symplectic: ") + (ok ? "yes" : "no") + "\n");
    rc = ok ? 0 : 1;
  });

  // ---- orbit-verify ----
  auto c_ov = std::make_shared<Common>();
  auto ov_row = std::make_shared<std::string>();
  auto ov_target = std::make_shared<std::string>();
  auto ov_g = std::make_shared<std::string>();
  auto ov_kind = std::make_shared<std::string>("sp");
  auto ov_ops = std::make_shared<std::vector<std::string>>();
  CLI::App* ov = app.add_subcommand("orbit-verify", "verify v * G == target plus the membership claim for G");
  add_common(ov, *c_ov);
  ov->add_option("--row", *ov_row, "named source row")->required();
  ov->add_option("--target", *ov_target, "named target row")->required();
  ov->add_option("--g", *ov_g, "named matrix G")->required();
  ov->add_option("--kind", *ov_kind, "claimed membership: sp|sl|eprod")
      ->check(CLI::IsMember({"sp", "sl", "eprod"}));
  ov->add_option("--op", *ov_ops, "transvection 'from,to,expr' (repeatable, 0-based, for eprod)");
  ov->callback([&rc, c_ov, ov_row, ov_target, ov_g, ov_kind, ov_ops] {
    Session& s = need_session(*c_ov);
    const auto& row = find_in(s.rows, *ov_row, "row").value;
    const auto& target = find_in(s.rows, *ov_target, "row").value;
    const auto& g = find_in(s.matrices, *ov_g, "matrix").value;
    OrbitKind kind = *ov_kind == "sp"   ? OrbitKind::Sp
                     : *ov_kind == "sl" ? OrbitKind::SL
                                        : OrbitKind::EProd;
    std::vector<Transvection> ops;
    for (const auto& spec : *ov_ops) {
      auto c1 = spec.find(',');
      auto c2 = c1 == std::string::npos ? std::string::npos : spec.find(',', c1 + 1);
      if (c2 == std::string::npos)
        throw SessionError("--op expects from,to,expr, got '" + spec + "'");
      ops.push_back({std::stoul(spec.substr(0, c1)), std::stoul(spec.substr(c1 + 1, c2 - c1 - 1)),
                     g.ring()->element(spec.substr(c2 + 1))});
    }
    OrbitCheck check = verify_orbit_certificate(row.v, target.v, {g, kind, std::move(ops)});
    ordered_json j;
    j["verified"] = check.verified;
    if (!check.verified) j["reason"] = check.reason;
    emit(*c_ov, j,
         check.verified ? "orbit certificate: verified\n"
                        : "orbit certificate: FAILED (" + check.reason + ")\n");
    rc = check.verified ? 0 : 1;
  });

  // ---- construct-qv ----
  auto c_qv = std::make_shared<Common>();
  auto qv_entries = std::make_shared<std::vector<std::string>>();
  auto qv_row = std::make_shared<std::string>();
  CLI::App* qv = app.add_subcommand("construct-qv", "build the form Q(v) of a unimodular row");
  add_common(qv, *c_qv);
  add_ring_spec(qv, *c_qv);
  qv->add_option("--entry", *qv_entries, "row entry (repeatable)");
  qv->add_option("--row", *qv_row, "named row from the session");
  qv->callback([&rc, c_qv, qv_entries, qv_row] {
    std::optional<UnimodularRow> row;
    if (!qv_row->empty()) {
      row = find_in(need_session(*c_qv).rows, *qv_row, "row").value;
    } else {
      RingPtr ring = resolve_ring(*c_qv);
      row = check_unimodular(ring, parse_row(ring, *qv_entries));
      if (!row) {
        emit(*c_qv, ordered_json{{"unimodular", false}}, "row is not unimodular\n");
        rc = 1;
        return;
      }
    }
    QvConstruction q = construct_qv(*row);
    ordered_json j;
    j["rank"] = row->size() - 2;
    j["projector"] = matrix_json_strings(q.projector);
    j["gram"] = matrix_json_strings(q.form.gram());
    std::string human = "rank = " + std::to_string(row->size() - 2) + "\nprojector: " +
                        q.projector.to_string() + "\ngram: " + q.form.gram().to_string() + "\n";
    emit(*c_qv, j, human);
    rc = 0;
  });

  // ---- isometry-verify ----
  auto c_iv = std::make_shared<Common>();
  auto iv_src = std::make_shared<std::string>();
  auto iv_tgt = std::make_shared<std::string>();
  auto iv_map = std::make_shared<std::string>();
  auto iv_inv = std::make_shared<std::string>();
  CLI::App* iv = app.add_subcommand("isometry-verify", "verify an isometry certificate between session forms");
  add_common(iv, *c_iv);
  iv->add_option("--source", *iv_src, "named source form")->required();
  iv->add_option("--target", *iv_tgt, "named target form")->required();
  iv->add_option("--map", *iv_map, "named matrix for the map")->required();
  iv->add_option("--inverse", *iv_inv, "named matrix for the inverse (optional)");
  iv->callback([&rc, c_iv, iv_src, iv_tgt, iv_map, iv_inv] {
    Session& s = need_session(*c_iv);
    IsometryCertificate cert{find_in(s.forms, *iv_src, "form").value,
                             find_in(s.forms, *iv_tgt, "form").value,
                             find_in(s.matrices, *iv_map, "matrix").value, std::nullopt};
    if (!iv_inv->empty()) cert.inverse = find_in(s.matrices, *iv_inv, "matrix").value;
    IsometryReport rep = verify_isometry(cert);
    ordered_json j;
    j["verified"] = rep.verified;
    if (!rep.verified) j["reason"] = rep.reason;
    emit(*c_iv, j,
         rep.verified ? "isometry: verified\n" : "isometry: FAILED (" + rep.reason + ")\n");
    rc = rep.verified ? 0 : 1;
  });

  // ---- symplectic-class ----
  auto c_sc = std::make_shared<Common>();
  auto sc_entries = std::make_shared<std::vector<std::string>>();
  auto sc_row = std::make_shared<std::string>();
  CLI::App* sc = app.add_subcommand(
      "symplectic-class", "decompose H(A) + Q(v) and read the symplectic class back off");
  add_common(sc, *c_sc);
  add_ring_spec(sc, *c_sc);
  sc->add_option("--entry", *sc_entries, "row entry (repeatable)");
  sc->add_option("--row", *sc_row, "named row from the session");
  sc->callback([&rc, c_sc, sc_entries, sc_row] {
    std::optional<UnimodularRow> row;
    if (!sc_row->empty()) {
      row = find_in(need_session(*c_sc).rows, *sc_row, "row").value;
    } else {
      RingPtr ring = resolve_ring(*c_sc);
      row = check_unimodular(ring, parse_row(ring, *sc_entries));
      if (!row) {
        emit(*c_sc, ordered_json{{"unimodular", false}}, "row is not unimodular\n");
        rc = 1;
        return;
      }
    }
    QvConstruction q = construct_qv(*row);
    UnimodularRow back = symplectic_class(q.form, decomposition_certificate(q));
    bool verbatim = back.v == row->v && back.w == row->w;
    ordered_json j;
    j["v"] = row_json(back.v);
    j["w"] = row_json(back.w);
    j["verbatim_round_trip"] = verbatim;
    std::string human;
    for (std::size_t i = 0; i < back.v.size(); ++i)
      human += "v[" + std::to_string(i) + "] = " + back.v[i].to_string() + "\n";
    for (std::size_t i = 0; i < back.w.size(); ++i)
      human += "w[" + std::to_string(i) + "] = " + back.w[i].to_string() + "\n";
    human += std::string("round trip: ") + (verbatim ? "verbatim" : "MISMATCH") + "\n";
    emit(*c_sc, j, human);
    rc = verbatim ? 0 : 1;
  });

  // ---- transition ----
  auto c_tr = std::make_shared<Common>();
  auto tr_prime = std::make_shared<std::vector<std::string>>();
  auto tr_kind = std::make_shared<std::string>("untyped");
  auto tr_consts = std::make_shared<std::vector<std::string>>();
  auto tr_from = std::make_shared<std::vector<std::string>>();
  auto tr_to = std::make_shared<std::vector<std::string>>();
  CLI::App* tr = app.add_subcommand("transition", "transition matrix between regular sequences at a prime");
  add_common(tr, *c_tr);
  add_ring_spec(tr, *c_tr);
  tr->add_option("--prime", *tr_prime, "prime generator (repeatable)")->required();
  tr->add_option("--kind", *tr_kind, "residue field kind: untyped|real|complex")
      ->check(CLI::IsMember({"untyped", "real", "complex"}));
  tr->add_option("--constant", *tr_consts, "field constant var=minpoly (repeatable)");
  tr->add_option("--from", *tr_from, "source sequence entry (repeatable)")->required();
  tr->add_option("--to", *tr_to, "target sequence entry (repeatable)")->required();
  tr->callback([&rc, c_tr, tr_prime, tr_kind, tr_consts, tr_from, tr_to] {
    RingPtr ring = resolve_ring(*c_tr);
    PresentedField f = field_from_flags(ring, *tr_prime, *tr_kind, *tr_consts);
    Transition t = transition_matrix(f, parse_row(ring, *tr_from), parse_row(ring, *tr_to));
    std::string status = t.status == TransitionStatus::Ok           ? "ok"
                         : t.status == TransitionStatus::Degenerate ? "degenerate"
                                                                    : "not-expressible";
    ordered_json j;
    j["status"] = status;
    std::string human = "status: " + status + "\n";
    if (t.status != TransitionStatus::NotExpressible) {
      j["matrix"] = matrix_json_strings(t.matrix);
      j["det"] = t.det.to_string();
      j["det_mod_prime"] = t.det_mod_prime.to_string();
      human += "matrix: " + t.matrix.to_string() + "\n";
      human += "det = " + t.det.to_string() + "\n";
      human += "det mod prime = " + t.det_mod_prime.to_string() + "\n";
    }
    emit(*c_tr, j, human);
    rc = t.status == TransitionStatus::Ok ? 0 : 1;
  });

  // ---- residue ----
  auto c_rs = std::make_shared<Common>();
  auto rs_cycle = std::make_shared<std::string>();
  auto rs_field = std::make_shared<std::string>();
  auto rs_comp = std::make_shared<int>(-1);
  CLI::App* rs = app.add_subcommand("residue", "second residue of cycle components at a session field");
  add_common(rs, *c_rs);
  rs->add_option("--cycle", *rs_cycle, "named cycle")->required();
  rs->add_option("--field", *rs_field, "named residue field")->required();
  rs->add_option("--component", *rs_comp, "restrict to one component (0-based)");
  rs->callback([&rc, c_rs, rs_cycle, rs_field, rs_comp] {
    Session& s = need_session(*c_rs);
    const FramedCycle& cyc = find_in(s.cycles, *rs_cycle, "cycle").value;
    const PresentedField& f = find_in(s.fields, *rs_field, "field").value;
    ordered_json arr = ordered_json::array();
    std::string human;
    for (std::size_t i = 0; i < cyc.components().size(); ++i) {
      if (*rs_comp >= 0 && static_cast<std::size_t>(*rs_comp) != i) continue;
      ResidueResult r = residue_at(cyc.components()[i], f);
      ordered_json jr;
      jr["component"] = i;
      jr["zero"] = r.symbol.is_zero();
      std::string line = "residue[" + std::to_string(i) + "] = ";
      if (r.symbol.is_zero()) {
        line += "0";
      } else {
        jr["sign"] = r.symbol.sign;
        jr["unit"] = r.symbol.unit.to_string();
        ordered_json fr = ordered_json::array();
        std::string frs;
        for (std::size_t k = 0; k < r.symbol.frame.size(); ++k) {
          fr.push_back(r.symbol.frame[k].to_string());
          frs += (k ? ", " : "") + r.symbol.frame[k].to_string();
        }
        jr["frame"] = fr;
        line += std::string(r.symbol.sign < 0 ? "-" : "") + "<" + r.symbol.unit.to_string() +
                "> Kos(" + frs + ")";
      }
      human += line + "\n";
      arr.push_back(std::move(jr));
    }
    emit(*c_rs, arr, human);
    rc = 0;
  });

  // ---- square-check ----
  auto c_sq = std::make_shared<Common>();
  auto sq_prime = std::make_shared<std::vector<std::string>>();
  auto sq_kind = std::make_shared<std::string>("untyped");
  auto sq_consts = std::make_shared<std::vector<std::string>>();
  auto sq_expr = std::make_shared<std::string>();
  auto sq_wa = std::make_shared<std::string>();
  auto sq_wb = std::make_shared<std::string>();
  auto sq_scale = std::make_shared<std::string>("1");
  CLI::App* sq = app.add_subcommand("square-check", "normalize a unit class, or verify a square witness");
  add_common(sq, *c_sq);
  add_ring_spec(sq, *c_sq);
  sq->add_option("--prime", *sq_prime, "prime generator (repeatable)")->required();
  sq->add_option("--kind", *sq_kind, "residue field kind: untyped|real|complex")
      ->check(CLI::IsMember({"untyped", "real", "complex"}));
  sq->add_option("--constant", *sq_consts, "field constant var=minpoly (repeatable)");
  sq->add_option("--expr", *sq_expr, "the unit to examine")->required();
  sq->add_option("--witness-a", *sq_wa, "square witness numerator a");
  sq->add_option("--witness-b", *sq_wb, "square witness denominator b");
  sq->add_option("--scale", *sq_scale, "rational scale for the witness (default 1)");
  sq->callback([&rc, c_sq, sq_prime, sq_kind, sq_consts, sq_expr, sq_wa, sq_wb, sq_scale] {
    RingPtr ring = resolve_ring(*c_sq);
    PresentedField f = field_from_flags(ring, *sq_prime, *sq_kind, *sq_consts);
    RingElement u = ring->element(*sq_expr);
    if (!sq_wa->empty() || !sq_wb->empty()) {
      SquareWitness wit{parse_polynomial(*sq_wa, ring->vars(), ring->order()),
                        parse_polynomial(*sq_wb, ring->vars(), ring->order()),
                        rat_from_string(*sq_scale)};
      SquareCheck check = verify_square_class(f, u, wit);
      ordered_json j;
      j["verified"] = check.verified;
      if (!check.verified) j["reason"] = check.reason;
      emit(*c_sq, j,
           check.verified ? "witness: verified\n" : "witness: FAILED (" + check.reason + ")\n");
      rc = check.verified ? 0 : 1;
      return;
    }
    NormalizedUnit n = normalize_unit(f, u);
    ordered_json j;
    j["trivial"] = n.is_trivial();
    j["class"] = n.unit.to_string();
    emit(*c_sq, j,
         n.is_trivial() ? std::string("class: trivial (square)\n")
                        : "class: <" + n.unit.to_string() + ">\n");
    rc = n.is_trivial() ? 0 : 1;
  });

  // ---- cycle-diff ----
  auto c_cd = std::make_shared<Common>();
  auto cd_cycle = std::make_shared<std::string>();
  auto cd_fields = std::make_shared<std::vector<std::string>>();
  CLI::App* cd = app.add_subcommand("cycle-diff", "differential check of a cycle at candidate primes");
  add_common(cd, *c_cd);
  cd->add_option("--cycle", *cd_cycle, "named cycle")->required();
  cd->add_option("--field", *cd_fields, "named residue field (repeatable)")->required();
  cd->callback([&rc, c_cd, cd_cycle, cd_fields] {
    Session& s = need_session(*c_cd);
    const FramedCycle& cyc = find_in(s.cycles, *cd_cycle, "cycle").value;
    std::vector<PresentedField> fields;
    for (const auto& name : *cd_fields) fields.push_back(find_in(s.fields, name, "field").value);
    auto reports = differential_check(cyc, fields);
    ordered_json arr = ordered_json::array();
    std::string human;
    bool all_zero = true;
    for (const auto& r : reports) {
      ordered_json jr;
      jr["prime"] = r.prime_label;
      jr["verdict"] = verdict_name(r.verdict);
      jr["note"] = r.note;
      arr.push_back(std::move(jr));
      human += "d at " + r.prime_label + ": " + verdict_name(r.verdict) + " (" + r.note + ")\n";
      if (r.verdict != Verdict::Zero) all_zero = false;
    }
    emit(*c_cd, arr, human);
    rc = all_zero ? 0 : 1;
  });

  // ---- cycle-transport ----
  auto c_ct = std::make_shared<Common>();
  auto ct_cycle = std::make_shared<std::string>();
  auto ct_target = std::make_shared<std::string>();
  auto ct_images = std::make_shared<std::vector<std::string>>();
  CLI::App* ct = app.add_subcommand("cycle-transport", "push a cycle through a hom given by generator images");
  add_common(ct, *c_ct);
  ct->add_option("--cycle", *ct_cycle, "named cycle")->required();
  ct->add_option("--target", *ct_target, "named target ring")->required();
  ct->add_option("--image", *ct_images, "image of the i-th source variable (repeatable, in order)")
      ->required();
  ct->callback([&rc, c_ct, ct_cycle, ct_target, ct_images] {
    Session& s = need_session(*c_ct);
    const FramedCycle& cyc = find_in(s.cycles, *ct_cycle, "cycle").value;
    RingPtr target = s.ring(*ct_target);
    RingHom h = define_hom(cyc.ring(), target, *ct_images);
    FramedCycle moved = transport_cycle(h, cyc);
    emit(*c_ct, cycle_json(moved), cycle_human(moved));
    rc = 0;
  });

  // ---- cycle-boundary ----
  auto c_cb = std::make_shared<Common>();
  auto cb_cycle = std::make_shared<std::string>();
  auto cb_along = std::make_shared<std::string>();
  auto cb_quot = std::make_shared<std::string>();
  auto cb_hints = std::make_shared<std::vector<std::string>>();
  CLI::App* cb = app.add_subcommand("cycle-boundary", "boundary of a cycle along f into a quotient presentation");
  add_common(cb, *c_cb);
  cb->add_option("--cycle", *cb_cycle, "named cycle")->required();
  cb->add_option("--along", *cb_along, "the element f")->required();
  cb->add_option("--quotient", *cb_quot, "named quotient ring")->required();
  cb->add_option("--hint", *cb_hints, "valuation hint 'component:valuation:unit-expr' (repeatable)");
  cb->callback([&rc, c_cb, cb_cycle, cb_along, cb_quot, cb_hints] {
    Session& s = need_session(*c_cb);
    const FramedCycle& cyc = find_in(s.cycles, *cb_cycle, "cycle").value;
    RingPtr quotient = s.ring(*cb_quot);
    std::vector<std::optional<BoundaryHint>> hints;
    if (!cb_hints->empty()) {
      hints.assign(cyc.components().size(), std::nullopt);
      for (const auto& spec : *cb_hints) {
        auto c1 = spec.find(':');
        auto c2 = c1 == std::string::npos ? std::string::npos : spec.find(':', c1 + 1);
        if (c2 == std::string::npos)
          throw SessionError("--hint expects component:valuation:expr, got '" + spec + "'");
        std::size_t idx = std::stoul(spec.substr(0, c1));
        if (idx >= hints.size()) throw SessionError("--hint component index out of range");
        hints[idx] = BoundaryHint{static_cast<unsigned>(std::stoul(spec.substr(c1 + 1, c2 - c1 - 1))),
                                  spec.substr(c2 + 1)};
      }
    }
    FramedCycle bd = boundary_along(cyc, cyc.ring()->element(*cb_along), quotient, hints);
    emit(*c_cb, cycle_json(bd), cycle_human(bd));
    rc = 0;
  });

  // ---- verify-paper ----
  auto c_vp = std::make_shared<Common>();
  auto vp_name = std::make_shared<std::string>("all");
  CLI::App* vp = app.add_subcommand("verify-paper", "run the canned verification scenarios");
  add_common(vp, *c_vp);
  vp->add_option("--scenario", *vp_name, "scenario name or 'all' (default)");
  vp->callback([&rc, c_vp, vp_name] {
    std::vector<ScenarioReport> reports;
    if (*vp_name == "all")
      reports = run_all_scenarios();
    else
      reports.push_back(run_scenario(*vp_name));
    bool all = true;
    ordered_json arr = ordered_json::array();
    std::string human;
    for (const auto& r : reports) {
      arr.push_back(report_to_json(r));
      human += std::string(r.pass ? "PASS " : "FAIL ") + r.name + "\n";
      for (const auto& a : r.assertions) {
        human += std::string("  [") + (a.pass ? "ok" : "FAIL") + "] " + a.label;
        if (!a.detail.empty()) human += " -- " + a.detail;
        human += "\n";
      }
      all = all && r.pass;
    }
    human += all ? "all scenarios passed\n"
                 : "some scenarios FAILED\n";
    emit(*c_vp, arr, human);
    rc = all ? 0 : 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return 3;
  }
  return rc;
}
