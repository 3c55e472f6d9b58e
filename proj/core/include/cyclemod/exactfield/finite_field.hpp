#pragma once

#include "cyclemod/exactfield/integer.hpp"

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace cyclemod {

class FiniteField;
using FieldPtr = std::shared_ptr<const FiniteField>;

/// Elements of F_{p^m} are encoded as integers in [0, p^m): the base-p
/// digits are the coefficients of the representative polynomial in the
/// root `a` of the modulus (digit i is the coefficient of a^i).
using Code = std::uint32_t;

/// The field F_p[a]/(modulus). Instances are interned by (p, m): two
/// requests for the same order return the same object, so field identity
/// is pointer identity.
class FiniteField {
 public:
  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return m_; }
  std::uint32_t order() const { return q_; }
  /// Coefficients over F_p, low degree first, monic, size degree()+1.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  Code generator() const { return generator_; }
  /// The class of `a`; zero for prime fields, whose modulus is x.
  Code root() const { return m_ == 1 ? 0 : p_; }

  Code zero() const { return 0; }
  Code one() const { return 1; }
  Code from_int(std::int64_t n) const { return static_cast<Code>(mod_u64(n, p_)); }

  Code add(Code a, Code b) const;
  Code sub(Code a, Code b) const;
  Code neg(Code a) const;
  Code mul(Code a, Code b) const {
    if (a == 0 || b == 0) return 0;
    const std::uint64_t k = static_cast<std::uint64_t>(log_[a]) + log_[b];
    return exp_[k >= q_ - 1 ? k - (q_ - 1) : k];
  }
  Code inv(Code a) const;
  Code div(Code a, Code b) const { return mul(a, inv(b)); }
  Code pow(Code a, const Integer& e) const;
  Code pow(Code a, std::int64_t e) const;
  /// Frobenius a -> a^p.
  Code frobenius(Code a) const { return pow(a, static_cast<std::int64_t>(p_)); }

  /// Discrete logarithm to the fixed generator; a != 0. In [0, q-1).
  std::uint64_t log(Code a) const;
  Code exp(std::uint64_t k) const { return exp_[k % (q_ - 1)]; }
  /// log(-1): (q-1)/2 in odd characteristic, 0 in characteristic 2.
  std::uint64_t log_minus_one() const { return p_ == 2 ? 0 : (q_ - 1) / 2; }

  /// Multiplicative order of a != 0.
  std::uint64_t multiplicative_order(Code a) const;

  /// Representative printed as a polynomial in `a` ("2", "a+1", "2*a^2").
  std::string format(Code c) const;
  /// "GF(q)".
  std::string name() const;

  bool operator==(const FiniteField& o) const { return this == &o; }

  // Construction goes through make_field; public for make_shared.
  struct Token {};
  FiniteField(Token, std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus);

 private:
  Code slow_mul(Code a, Code b) const;
  Code slow_pow(Code a, std::uint64_t e) const;

  std::uint32_t p_;
  std::uint32_t m_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  Code generator_ = 1;
  std::vector<Code> exp_;
  std::vector<std::uint32_t> log_;
};

/// Upper bound on field orders (default 2^20).
std::uint64_t field_size_cap();
void set_field_size_cap(std::uint64_t cap);

/// F_{p^m} with the graded-lexicographically smallest monic irreducible
/// modulus and the smallest generator of full order.
/// Throws InputError for non-prime p or m == 0, DomainError above the cap.
FieldPtr make_field(std::uint64_t p, std::uint32_t m);

/// Field of order q = p^m; throws InputError if q is not a prime power.
FieldPtr field_of_order(std::uint64_t q);

struct FFElem {
  FieldPtr field;
  Code code = 0;

  bool operator==(const FFElem& o) const { return field == o.field && code == o.code; }
};

/// A ring embedding src -> dst, fixed by the image of src's root `a`.
/// Every morphism between finite fields in the engine is one of these;
/// they are explicit values rather than implied by the field pair.
class FiniteMap {
 public:
  FiniteMap() = default;
  /// Throws DomainError unless `root_image` is a root of src's modulus in dst.
  FiniteMap(FieldPtr src, FieldPtr dst, Code root_image);

  const FieldPtr& src() const { return src_; }
  const FieldPtr& dst() const { return dst_; }
  Code root_image() const { return root_image_; }
  /// log_dst of the image of src's generator.
  std::uint64_t generator_log() const { return gen_log_; }
  /// [dst : src].
  std::uint32_t degree() const { return dst_->degree() / src_->degree(); }

  Code apply(Code x) const {
    if (x == 0) return 0;
    return dst_->exp(mul_mod(src_->log(x), gen_log_, dst_->order() - 1));
  }
  bool in_image(Code y) const;
  /// The unique x with apply(x) == y; throws DomainError if y is not in the image.
  Code preimage(Code y) const;
  /// The exponent j with image(g_src) = g_dst^{j N}, N = (|dst|-1)/(|src|-1).
  std::uint64_t twist() const;

  bool operator==(const FiniteMap& o) const {
    return src_ == o.src_ && dst_ == o.dst_ && root_image_ == o.root_image_;
  }

 private:
  FieldPtr src_;
  FieldPtr dst_;
  Code root_image_ = 0;
  std::uint64_t gen_log_ = 0;
};

/// this ∘ first: apply `first`, then `second`.
FiniteMap compose(const FiniteMap& second, const FiniteMap& first);
FiniteMap identity_map(const FieldPtr& f);

/// All embeddings src -> dst ordered by the image of the root; empty when
/// degree(src) does not divide degree(dst).
std::vector<FiniteMap> all_embeddings(const FieldPtr& src, const FieldPtr& dst);

/// The first of all_embeddings; throws DomainError when there is none.
FiniteMap default_embedding(const FieldPtr& src, const FieldPtr& dst);

/// The unique embedding sending each constraint.first to constraint.second,
/// if one exists. Constraints must generate src for uniqueness; the first
/// match in root order is returned otherwise.
std::optional<FiniteMap> find_embedding(const FieldPtr& src, const FieldPtr& dst,
                                        const std::vector<std::pair<Code, Code>>& constraints);

/// N_{ext/sub}(x) = x^{1+q+...+q^{d-1}} with q = |sub|, returned in sub via
/// the default embedding. Throws DomainError if sub does not embed in ext.
FFElem norm_ff(const FieldPtr& sub, const FieldPtr& ext, const FFElem& x);

/// The norm down along an explicit embedding.
Code norm_along(const FiniteMap& map, Code x);

}  // namespace cyclemod
