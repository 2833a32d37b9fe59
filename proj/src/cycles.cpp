#include "witt/cycles.hpp"

#include <algorithm>

namespace witt {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Zero: return "zero";
    case Verdict::Nonzero: return "nonzero";
    case Verdict::Undetermined: return "undetermined";
  }
  return "?";
}

FramedCycle::FramedCycle(RingPtr ring, std::vector<CycleComponent> comps)
    : ring_(std::move(ring)), comps_(std::move(comps)) {
  for (std::size_t ci = 0; ci < comps_.size(); ++ci) {
    const auto& c = comps_[ci];
    auto where = [&] { return "cycle component " + std::to_string(ci) + ": "; };
    if (c.sign != 1 && c.sign != -1) throw CycleError(where() + "sign must be +1 or -1");
    if (c.prime.empty()) throw CycleError(where() + "empty prime");
    if (c.frame.empty()) throw CycleError(where() + "empty frame");
    bool all_zero = true;
    for (const auto& g : c.prime) {
      if (!presentation_equal(g.ring(), ring_)) throw CycleError(where() + "foreign prime generator");
      if (!g.is_zero()) all_zero = false;
    }
    if (all_zero) throw CycleError(where() + "prime generated by zeros");
    if (!presentation_equal(c.unit.ring(), ring_)) throw CycleError(where() + "foreign unit");

    std::vector<Polynomial> pg;
    for (const auto& g : c.prime) pg.push_back(g.poly());
    for (const auto& r : ring_->relations()) pg.push_back(r);
    GroebnerBasis pgb = buchberger(ring_->vars(), pg, ring_->order());
    if (pgb.is_trivial()) throw CycleError(where() + "prime contains 1");
    if (pgb.nf(c.unit.poly()).is_zero()) throw CycleError(where() + "unit lies in the prime");

    // frame elements must lie in the prime...
    for (const auto& fe : c.frame) {
      if (!presentation_equal(fe.ring(), ring_)) throw CycleError(where() + "foreign frame element");
      if (!pgb.nf(fe.poly()).is_zero())
        throw CycleError(where() + "frame element " + fe.to_string() + " is not in the prime");
    }
    // ...and be declared regular: each one nonzero modulo its predecessors
    for (std::size_t i = 0; i < c.frame.size(); ++i) {
      std::vector<Polynomial> prev;
      for (std::size_t j = 0; j < i; ++j) prev.push_back(c.frame[j].poly());
      for (const auto& r : ring_->relations()) prev.push_back(r);
      GroebnerBasis g = buchberger(ring_->vars(), prev, ring_->order());
      if (g.is_trivial() || g.nf(c.frame[i].poly()).is_zero())
        throw CycleError(where() + "frame fails the declared-regularity check at position " +
                         std::to_string(i));
    }
  }
}

std::vector<PrimeReport> differential_check(const FramedCycle& cycle,
                                            const std::vector<PresentedField>& primes) {
  std::vector<PrimeReport> out;
  for (const auto& f : primes) {
    PrimeReport rep;
    rep.prime_label = f.describe();
    try {
      std::vector<ResidueLine> lines;
      for (std::size_t i = 0; i < cycle.components().size(); ++i) {
        ResidueResult r = residue_at(cycle.components()[i], f);
        if (!r.symbol.is_zero()) lines.push_back({i, r.symbol});
      }
      if (lines.empty()) {
        rep.verdict = Verdict::Zero;
        rep.note = "no nonzero residues";
      } else if (lines.size() % 2 == 1) {
        rep.verdict = Verdict::Nonzero;
        rep.residues = lines;
        rep.note = "odd number of nonzero residues (rank mod 2)";
      } else {
        rep.residues = lines;
        // greedy witnessed pairing
        std::vector<bool> used(lines.size(), false);
        bool stuck = false;
        for (std::size_t i = 0; i < lines.size() && !stuck; ++i) {
          if (used[i]) continue;
          bool paired = false;
          for (std::size_t j = i + 1; j < lines.size(); ++j) {
            if (used[j]) continue;
            RingElement ui = f.ambient()->element(lines[i].symbol.unit);
            RingElement uj = f.ambient()->element(lines[j].symbol.unit);
            int s = lines[i].symbol.sign * lines[j].symbol.sign;
            RingElement prod = s >= 0 ? -(ui * uj) : ui * uj;
            if (normalize_unit(f, prod).is_trivial()) {
              used[i] = used[j] = true;
              paired = true;
              break;
            }
          }
          if (!paired) stuck = true;
        }
        if (stuck) {
          rep.verdict = Verdict::Undetermined;
          rep.note = "even residue count but cancellation could not be witnessed";
        } else {
          rep.verdict = Verdict::Zero;
          rep.note = "residues cancel in witnessed pairs";
        }
      }
    } catch (const Error& e) {
      rep.verdict = Verdict::Undetermined;
      rep.note = e.what();
    }
    out.push_back(std::move(rep));
  }
  return out;
}

namespace {

// each of `claimed` must lie in (generated) + relations and vice versa
void require_same_ideal(const RingPtr& ring, const std::vector<RingElement>& claimed,
                        const std::vector<RingElement>& generated, const std::string& what) {
  auto contains = [&](const std::vector<RingElement>& gens, const RingElement& z) {
    std::vector<Polynomial> g;
    for (const auto& x : gens) g.push_back(x.poly());
    for (const auto& r : ring->relations()) g.push_back(r);
    return lift_membership(z.poly(), g, ring->order()).has_value();
  };
  for (const auto& z : claimed)
    if (!contains(generated, z))
      throw CycleError(what + ": supplied generator " + z.to_string() +
                       " is not in the image ideal");
  for (const auto& z : generated)
    if (!contains(claimed, z))
      throw CycleError(what + ": image element " + z.to_string() +
                       " is not generated by the supplied prime");
}

}  // namespace

FramedCycle transport_cycle(const RingHom& h, const FramedCycle& cycle,
                            const std::vector<ImageSpec>& specs) {
  if (!presentation_equal(cycle.ring(), h.source()))
    throw RingMismatchError("transport_cycle: cycle lives over a different ring than the hom source");
  if (!specs.empty() && specs.size() != cycle.components().size())
    throw DimensionError("transport_cycle: need one image spec per component (or none)");
  const RingPtr& target = h.target();

  std::vector<CycleComponent> out;
  for (std::size_t ci = 0; ci < cycle.components().size(); ++ci) {
    const CycleComponent& c = cycle.components()[ci];
    const ImageSpec* spec = specs.empty() ? nullptr : &specs[ci];
    auto where = [&] { return "transport of component " + std::to_string(ci); };

    std::vector<RingElement> mapped_prime;
    for (const auto& g : c.prime) mapped_prime.push_back(h.apply(g));
    std::vector<RingElement> prime_out =
        (spec && spec->prime) ? *spec->prime : mapped_prime;
    if (spec && spec->prime) require_same_ideal(target, *spec->prime, mapped_prime, where());

    std::vector<RingElement> mapped_frame;
    for (const auto& g : c.frame) mapped_frame.push_back(h.apply(g));
    std::vector<RingElement> frame_out;
    if (spec && spec->frame)
      frame_out = *spec->frame;
    else if (prime_out.size() == mapped_frame.size())
      frame_out = prime_out;
    else
      frame_out = mapped_frame;

    PresentedField fld = PresentedField::make(target, prime_out,
                                              spec ? spec->kind : FieldKind::Untyped,
                                              spec ? spec->constants : std::vector<FieldConstant>{});

    RingElement unit_out = h.apply(c.unit);
    bool same_frame = frame_out.size() == mapped_frame.size();
    if (same_frame)
      for (std::size_t i = 0; i < frame_out.size(); ++i)
        if (!(frame_out[i] == mapped_frame[i])) same_frame = false;
    if (!same_frame) {
      Transition tr = transition_matrix(fld, mapped_frame, frame_out);
      if (tr.status == TransitionStatus::NotExpressible)
        throw CycleError(where() + ": mapped frame is not expressible in the requested frame");
      if (tr.status == TransitionStatus::Degenerate)
        throw CycleError(where() + ": frame transition is degenerate at the image prime");
      unit_out = unit_out * tr.det;
    }

    NormalizedUnit nm;
    try {
      nm = normalize_unit(fld, unit_out);
    } catch (const FieldError&) {
      throw CycleError(where() + ": image unit vanishes on the image component");
    }
    out.push_back({std::move(prime_out), target->element(nm.unit), std::move(frame_out), c.sign});
  }
  return FramedCycle(target, std::move(out));
}

namespace {

struct CoreRing {
  RingPtr ring;                         // inverters stripped
  std::vector<std::size_t> old_to_new;  // inverter slots map to 0 (unused)
  std::vector<bool> usable;             // non-inverter old vars
};

CoreRing strip_inverters(const RingPtr& r) {
  CoreRing core;
  const auto& flags = r->inverter_flags();
  core.usable.assign(r->vars()->size(), true);
  VarList names;
  core.old_to_new.assign(r->vars()->size(), 0);
  for (std::size_t i = 0; i < r->vars()->size(); ++i) {
    if (flags[i]) {
      core.usable[i] = false;
      continue;
    }
    core.old_to_new[i] = names.size();
    names.push_back((*r->vars())[i]);
  }
  VarsPtr nv = make_vars(std::move(names));
  std::vector<Polynomial> rels;
  for (const auto& rel : r->relations())
    if (rel.uses_only(core.usable)) rels.push_back(rel.map_vars(nv, core.old_to_new));
  core.ring = PresentedRing::make(nv, std::move(rels), r->order());
  return core;
}

}  // namespace

FramedCycle boundary_along(const FramedCycle& cycle, const RingElement& f, const RingPtr& quotient,
                           const std::vector<std::optional<BoundaryHint>>& hints) {
  const RingPtr& r = cycle.ring();
  if (!presentation_equal(f.ring(), r)) throw RingMismatchError("boundary_along: f from a different ring");
  if (f.is_zero()) throw CycleError("boundary_along: f is zero");
  if (!hints.empty() && hints.size() != cycle.components().size())
    throw DimensionError("boundary_along: need one hint slot per component (or none)");

  CoreRing core = strip_inverters(r);
  const RingPtr& r0 = core.ring;
  auto to_core = [&](const RingElement& z, const std::string& what) {
    if (!z.poly().uses_only(core.usable))
      throw CycleError("boundary_along: " + what +
                       " uses inverter variables; rewrite the data without them first");
    return r0->element(z.poly().map_vars(r0->vars(), core.old_to_new));
  };
  RingElement f0 = to_core(f, "f");
  if (f0.is_zero()) throw CycleError("boundary_along: f vanishes in the core ring");

  // quotient variables must be a subset of the core variables
  std::vector<std::size_t> q_to_core(quotient->vars()->size());
  for (std::size_t i = 0; i < quotient->vars()->size(); ++i)
    q_to_core[i] = r0->var_index((*quotient->vars())[i]);

  // GB of (core relations + f): the quotient presentation must hold in it
  std::vector<Polynomial> qgens;
  qgens.push_back(f0.poly());
  for (const auto& rel : r0->relations()) qgens.push_back(rel);
  GroebnerBasis gbq = buchberger(r0->vars(), qgens, r0->order());
  if (gbq.is_trivial()) throw CycleError("boundary_along: core ring collapses modulo f");
  for (const auto& rel : quotient->relations()) {
    Polynomial lifted = rel.map_vars(r0->vars(), q_to_core);
    if (!gbq.nf(lifted).is_zero())
      throw CycleError("boundary_along: quotient relation " + rel.to_string() +
                       " does not hold in core/(f)");
  }

  GroebnerBasis gb0 = buchberger(r0->vars(), r0->relations(), r0->order());
  std::vector<Polynomial> val_gens;
  val_gens.push_back(f0.poly());
  for (const auto& rel : r0->relations()) val_gens.push_back(rel);
  GroebnerBasis gbf = buchberger(r0->vars(), val_gens, r0->order());

  // name-based var subset check for quotient expressibility
  std::vector<bool> q_allowed(r0->vars()->size(), false);
  for (auto idx : q_to_core) q_allowed[idx] = true;
  // core -> quotient index map (unused slots land on 0; guarded by q_allowed)
  std::vector<std::size_t> core_to_q(r0->vars()->size(), 0);
  for (std::size_t i = 0; i < q_to_core.size(); ++i) core_to_q[q_to_core[i]] = i;
  auto to_quotient = [&](const RingElement& z, const std::string& what) {
    Polynomial red = gbq.nf(z.poly());
    if (!red.uses_only(q_allowed))
      throw CycleError("boundary_along: " + what + " = " + red.to_string() +
                       " is not expressible in the quotient variables");
    return quotient->element(red.map_vars(quotient->vars(), core_to_q));
  };

  constexpr unsigned kValuationBound = 8;
  std::vector<CycleComponent> out;
  for (std::size_t ci = 0; ci < cycle.components().size(); ++ci) {
    const CycleComponent& c = cycle.components()[ci];
    auto where = [&] { return "boundary of component " + std::to_string(ci); };
    RingElement u0 = to_core(c.unit, where() + ": unit");

    unsigned val = 0;
    RingElement reduced = u0;
    if (!hints.empty() && hints[ci]) {
      val = hints[ci]->valuation;
      reduced = r0->element(parse_polynomial(hints[ci]->unit_expr, r0->vars(), r0->order()));
      if (gbf.nf(reduced.poly()).is_zero())
        throw CycleError(where() + ": hinted unit is still divisible by f");
      RingElement recon = reduced * f0.pow(val);
      if (!(recon == u0)) throw CycleError(where() + ": hint does not reproduce the unit");
    } else {
      while (true) {
        if (gbf.nf(reduced.poly()).is_zero()) {
          if (val >= kValuationBound)
            throw CycleError(where() + ": valuation exceeds bound " +
                             std::to_string(kValuationBound) + "; supply a hint");
          std::vector<Polynomial> gens;
          gens.push_back(f0.poly());
          for (const auto& rel : r0->relations()) gens.push_back(rel);
          auto lift = lift_membership(reduced.poly(), gens, r0->order());
          if (!lift) throw InternalError(where() + ": nf said divisible but lift failed");
          reduced = r0->element((*lift)[0]);
          ++val;
        } else {
          break;
        }
      }
      // certified: unit == reduced * f^val mod core relations
      if (!(reduced * f0.pow(val) == u0))
        throw InternalError(where() + ": valuation certificate failed");
    }

    if (val % 2 == 0 && val > 0) continue;  // even positive valuation: no boundary
    if (val == 0) continue;                 // unit is a unit along f: no boundary

    std::vector<RingElement> prime_out;
    for (const auto& g : c.prime) prime_out.push_back(to_quotient(to_core(g, where() + ": prime"), where() + ": prime"));
    std::vector<RingElement> frame_out;
    for (const auto& g : c.frame) frame_out.push_back(to_quotient(to_core(g, where() + ": frame"), where() + ": frame"));
    RingElement unit_out = to_quotient(reduced, where() + ": unit");
    out.push_back({std::move(prime_out), std::move(unit_out), std::move(frame_out), c.sign});
  }
  return FramedCycle(quotient, std::move(out));
}

}  // namespace witt
