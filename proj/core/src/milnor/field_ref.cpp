#include "cyclemod/milnor/field_ref.hpp"

#include "cyclemod/errors.hpp"

namespace cyclemod {

std::string FieldRef::name() const {
  if (is_finite()) return base->name();
  return base->name() + "(" + var + ")";
}

FieldMap FieldMap::finite(FiniteMap m) {
  FieldMap f;
  f.src_ = FieldRef::finite(m.src());
  f.dst_ = FieldRef::finite(m.dst());
  f.m_ = std::move(m);
  return f;
}

FieldMap FieldMap::constants(FiniteMap m, std::string var) {
  FieldMap f;
  f.src_ = FieldRef::finite(m.src());
  f.dst_ = FieldRef::rational(m.dst(), std::move(var));
  f.m_ = std::move(m);
  return f;
}

FieldMap FieldMap::rational(FiniteMap m, RationalFunction image, std::string src_var, std::string dst_var) {
  if (image.field() != m.dst()) throw DomainError("variable image must be over the target constants");
  if (image.is_constant()) throw DomainError("variable image must be transcendental");
  FieldMap f;
  f.src_ = FieldRef::rational(m.src(), std::move(src_var));
  f.dst_ = FieldRef::rational(m.dst(), std::move(dst_var));
  f.m_ = std::move(m);
  f.image_ = std::move(image);
  return f;
}

FieldMap FieldMap::constant_extension(FiniteMap m, std::string var) {
  auto dst = m.dst();
  return rational(std::move(m), RationalFunction::variable(dst), var, var);
}

FieldMap FieldMap::identity(const FieldRef& f) {
  if (f.is_finite()) return finite(identity_map(f.base));
  return constant_extension(identity_map(f.base), f.var);
}

bool FieldMap::is_constant_extension() const {
  return image_.has_value() && *image_ == RationalFunction::variable(dst_.base);
}

Integer FieldMap::degree() const {
  if (!is_finite()) throw DomainError("transcendental extension " + to_string() + " has no degree");
  Integer d = m_.degree();
  if (image_) d *= image_->degree();
  return d;
}

RationalFunction FieldMap::apply(const RationalFunction& f) const {
  if (!image_) {
    if (!f.is_constant()) throw DomainError("map from a finite field applied to a non-constant");
    return RationalFunction::constant(m_.dst(), m_.apply(f.constant_value()));
  }
  return f.mapped(m_).compose(*image_);
}

FactoredUnit FieldMap::apply(const FactoredUnit& u) const {
  FactoredUnit out(m_.dst(), m_.apply(u.constant()));
  if (u.factors().empty()) return out;
  if (!image_) throw DomainError("map from a finite field applied to a non-constant");
  for (const auto& [p, e] : u.factors()) {
    out = out * unit_factor(RationalFunction(p.mapped(m_)).compose(*image_)).pow(e);
  }
  return out;
}

std::string FieldMap::to_string() const {
  std::string s = src_.name() + " -> " + dst_.name() + " [a -> " + m_.dst()->format(m_.root_image());
  if (image_) s += ", " + src_.var + " -> " + image_->to_string(dst_.var);
  return s + "]";
}

FieldMap compose(const FieldMap& second, const FieldMap& first) {
  if (!(first.dst() == second.src())) throw DomainError("maps do not compose");
  const FiniteMap m = compose(second.constant_map(), first.constant_map());
  if (!first.image()) {
    if (second.dst().is_finite()) return FieldMap::finite(m);
    return FieldMap::constants(m, second.dst().var);
  }
  RationalFunction img = first.image()->mapped(second.constant_map()).compose(*second.image());
  return FieldMap::rational(m, img, first.src().var, second.dst().var);
}

}  // namespace cyclemod
