#include "witt/monomial.hpp"

namespace witt {

int cmp(const Monomial& a, const Monomial& b, MonomialOrder ord) {
  if (a.nvars() != b.nvars()) throw VarMismatchError("comparing monomials over different variable counts");
  switch (ord) {
    case MonomialOrder::Lex: {
      for (std::size_t i = 0; i < a.nvars(); ++i) {
        if (a.exp(i) != b.exp(i)) return a.exp(i) > b.exp(i) ? 1 : -1;
      }
      return 0;
    }
    case MonomialOrder::Grevlex: {
      auto da = a.degree(), db = b.degree();
      if (da != db) return da > db ? 1 : -1;
      for (std::size_t i = a.nvars(); i-- > 0;) {
        if (a.exp(i) != b.exp(i)) return a.exp(i) < b.exp(i) ? 1 : -1;
      }
      return 0;
    }
  }
  throw InternalError("unknown monomial order");
}

std::string Monomial::to_string(const VarList& vars) const {
  std::string s;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (!exps_[i]) continue;
    if (!s.empty()) s += "*";
    s += vars[i];
    if (exps_[i] > 1) s += "^" + std::to_string(exps_[i]);
  }
  return s.empty() ? "1" : s;
}

}  // namespace witt
