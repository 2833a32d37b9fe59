#include "witt/ring.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace witt {

RingPtr PresentedRing::make(VarList vars, const std::vector<std::string>& relation_exprs,
                            MonomialOrder ord) {
  VarsPtr vp = make_vars(std::move(vars));
  std::vector<Polynomial> rels;
  rels.reserve(relation_exprs.size());
  for (const auto& e : relation_exprs) rels.push_back(parse_polynomial(e, vp, ord));
  return make(vp, std::move(rels), ord);
}

RingPtr PresentedRing::make(VarsPtr vars, std::vector<Polynomial> relations, MonomialOrder ord) {
  {
    std::set<std::string> seen;
    for (const auto& v : *vars)
      if (!seen.insert(v).second) throw Error("duplicate variable name '" + v + "'");
  }
  auto ring = std::shared_ptr<PresentedRing>(new PresentedRing());
  ring->vars_ = vars;
  ring->order_ = ord;
  for (auto& r : relations) {
    if (!same_vars(r.vars(), vars)) throw VarMismatchError("relation over different variables");
    r = r.with_order(ord);
  }
  ring->relations_ = std::move(relations);
  ring->gb_ = std::make_shared<const GroebnerBasis>(buchberger(vars, ring->relations_, ord));
  if (ring->gb_->is_trivial()) throw ZeroRingError("presentation collapses: 1 lies in the relation ideal");
  ring->is_inverter_.assign(vars->size(), false);
  return ring;
}

RingElement PresentedRing::element(const std::string& expr) const {
  return RingElement(shared_from_this(), parse_polynomial(expr, vars_, order_));
}
RingElement PresentedRing::element(const Polynomial& p) const {
  return RingElement(shared_from_this(), p);
}
RingElement PresentedRing::var(std::size_t i) const {
  return RingElement(shared_from_this(), Polynomial::variable(vars_, i, order_));
}
RingElement PresentedRing::var(const std::string& name) const { return var(var_index(name)); }
RingElement PresentedRing::constant(const Rational& c) const {
  return RingElement(shared_from_this(), Polynomial::constant(vars_, c, order_));
}
RingElement PresentedRing::zero() const { return constant(Rational(0)); }
RingElement PresentedRing::one() const { return constant(Rational(1)); }

std::size_t PresentedRing::var_index(const std::string& name) const {
  for (std::size_t i = 0; i < vars_->size(); ++i)
    if ((*vars_)[i] == name) return i;
  throw VarMismatchError("no variable named '" + name + "'");
}

std::string PresentedRing::describe() const {
  std::string s = "Q[";
  for (std::size_t i = 0; i < vars_->size(); ++i) {
    if (i) s += ",";
    s += (*vars_)[i];
  }
  s += "]";
  if (!relations_.empty()) {
    s += "/(";
    for (std::size_t i = 0; i < relations_.size(); ++i) {
      if (i) s += ", ";
      s += relations_[i].to_string();
    }
    s += ")";
  }
  return s;
}

bool presentation_equal(const RingPtr& a, const RingPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (*a->vars() != *b->vars() || a->order() != b->order()) return false;
  // same names + same order: reduced bases are directly comparable
  const auto& ga = a->gb().gens();
  const auto& gbs = b->gb().gens();
  if (ga.size() != gbs.size()) return false;
  for (std::size_t i = 0; i < ga.size(); ++i)
    if (ga[i] != gbs[i]) return false;
  return true;
}

RingElement::RingElement(RingPtr ring, const Polynomial& p) : ring_(std::move(ring)) {
  if (!same_vars(p.vars(), ring_->vars()))
    throw VarMismatchError("element polynomial over different variables");
  poly_ = ring_->nf(p);
}

static void require_same_ring(const RingElement& a, const RingElement& b) {
  if (!presentation_equal(a.ring(), b.ring()))
    throw RingMismatchError("operands belong to different presented rings");
}

RingElement RingElement::operator+(const RingElement& b) const {
  require_same_ring(*this, b);
  return RingElement(ring_, poly_ + b.poly_);
}
RingElement RingElement::operator-(const RingElement& b) const {
  require_same_ring(*this, b);
  return RingElement(ring_, poly_ - b.poly_);
}
RingElement RingElement::operator-() const { return RingElement(ring_, -poly_); }
RingElement RingElement::operator*(const RingElement& b) const {
  require_same_ring(*this, b);
  return RingElement(ring_, poly_ * b.poly_);
}
RingElement RingElement::operator*(const Rational& c) const {
  return RingElement(ring_, poly_ * c);
}
RingElement RingElement::pow(std::uint32_t e) const {
  RingElement r = ring_->one();
  RingElement base = *this;
  while (e) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}
bool RingElement::operator==(const RingElement& b) const {
  require_same_ring(*this, b);
  // both sides are normal forms, so polynomial equality decides
  return poly_ == b.poly_;
}

bool element_eq(const RingElement& a, const RingElement& b) { return a == b; }

std::optional<RingElement> try_invert(const RingElement& a) {
  if (a.is_zero()) return std::nullopt;
  std::vector<Polynomial> gens;
  gens.push_back(a.poly());
  for (const auto& r : a.ring()->relations()) gens.push_back(r);
  auto one = Polynomial::constant(a.ring()->vars(), Rational(1), a.ring()->order());
  auto lift = lift_membership(one, gens, a.ring()->order());
  if (!lift) return std::nullopt;
  RingElement inv = a.ring()->element((*lift)[0]);
  if (!(inv * a).is_one()) throw InternalError("try_invert: certificate failed recheck");
  return inv;
}

namespace {

std::string inverter_name(const Polynomial& f, const VarList& existing) {
  std::string s = "t_";
  for (char c : f.to_string()) {
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_')
      s += c;
    else if (c == '+')
      s += 'p';
    else if (c == '-')
      s += 'm';
    else if (c == '/')
      s += 'q';
    // '*', '^', spaces, parens dropped
  }
  while (std::find(existing.begin(), existing.end(), s) != existing.end()) s += "_";
  return s;
}

}  // namespace

RingPtr localize(const RingPtr& ring, const RingElement& f) {
  if (!presentation_equal(f.ring(), ring)) throw RingMismatchError("localize: element of a different ring");
  if (f.is_zero()) throw Error("localize: cannot invert 0");
  VarList nv = *ring->vars();
  std::string tname = inverter_name(f.poly(), nv);
  nv.push_back(tname);
  VarsPtr nvars = make_vars(std::move(nv));
  std::vector<std::size_t> lift_idx(ring->vars()->size());
  for (std::size_t i = 0; i < lift_idx.size(); ++i) lift_idx[i] = i;

  std::vector<Polynomial> rels;
  for (const auto& r : ring->relations()) rels.push_back(r.map_vars(nvars, lift_idx));
  Polynomial t = Polynomial::variable(nvars, nvars->size() - 1, ring->order());
  Polynomial fl = f.poly().map_vars(nvars, lift_idx);
  rels.push_back(t * fl - Polynomial::constant(nvars, Rational(1), ring->order()));

  auto out = std::const_pointer_cast<PresentedRing>(PresentedRing::make(nvars, rels, ring->order()));
  // carry over inverter bookkeeping, then record the new one
  std::vector<bool> flags(nvars->size(), false);
  std::vector<PresentedRing::Inverted> inv;
  for (const auto& rec : ring->inverted()) {
    inv.push_back({rec.element.map_vars(nvars, lift_idx), rec.inverter_var});
    flags[rec.inverter_var] = true;
  }
  inv.push_back({fl, nvars->size() - 1});
  flags[nvars->size() - 1] = true;
  out->inverted_ = std::move(inv);
  out->is_inverter_ = std::move(flags);
  return out;
}

RingHom::RingHom(RingPtr source, RingPtr target, std::vector<RingElement> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (images_.size() != source_->vars()->size())
    throw VarMismatchError("hom needs exactly one image per source generator");
  for (const auto& im : images_)
    if (!presentation_equal(im.ring(), target_))
      throw RingMismatchError("hom image lies in a different ring");
  std::vector<Polynomial> im_polys;
  im_polys.reserve(images_.size());
  for (const auto& im : images_) im_polys.push_back(im.poly());
  for (const auto& rel : source_->relations()) {
    Polynomial mapped = rel.substitute(im_polys);
    if (!target_->nf(mapped).is_zero())
      throw IllDefinedHomError("hom does not kill source relation " + rel.to_string(),
                               rel.to_string());
  }
}

RingElement RingHom::apply_poly(const Polynomial& p) const {
  if (!same_vars(p.vars(), source_->vars()))
    throw VarMismatchError("apply: polynomial over different variables");
  std::vector<Polynomial> im_polys;
  im_polys.reserve(images_.size());
  for (const auto& im : images_) im_polys.push_back(im.poly());
  return target_->element(p.substitute(im_polys));
}

RingElement RingHom::apply(const RingElement& x) const {
  if (!presentation_equal(x.ring(), source_)) throw RingMismatchError("apply: element of a different ring");
  return apply_poly(x.poly());
}

RingHom define_hom(const RingPtr& source, const RingPtr& target,
                   const std::vector<std::string>& image_exprs) {
  std::vector<RingElement> images;
  images.reserve(image_exprs.size());
  for (const auto& e : image_exprs) images.push_back(target->element(e));
  return RingHom(source, target, std::move(images));
}

RingHom define_hom(const RingPtr& source, const RingPtr& target, std::vector<RingElement> images) {
  return RingHom(source, target, std::move(images));
}

MutualInverseResult verify_mutually_inverse(const RingHom& f, const RingHom& g) {
  if (!presentation_equal(f.target(), g.source()) || !presentation_equal(g.target(), f.source()))
    throw RingMismatchError("verify_mutually_inverse: homs are not composable both ways");
  for (std::size_t i = 0; i < f.source()->vars()->size(); ++i) {
    RingElement back = g.apply(f.images()[i]);
    if (!(back == f.source()->var(i)))
      return {false, (*f.source()->vars())[i] + " (g(f(" + (*f.source()->vars())[i] + ")) != itself)"};
  }
  for (std::size_t i = 0; i < g.source()->vars()->size(); ++i) {
    RingElement back = f.apply(g.images()[i]);
    if (!(back == g.source()->var(i)))
      return {false, (*g.source()->vars())[i] + " (f(g(" + (*g.source()->vars())[i] + ")) != itself)"};
  }
  return {true, ""};
}

}  // namespace witt
