#pragma once

#include "solhnn/laurent.hpp"
#include "solhnn/matrix.hpp"

#include <optional>
#include <variant>

namespace solhnn {

// Z^n with injective non-surjective endomorphism given by an integer matrix
// with |det| >= 2.  Columns of M are the images of the standard basis.
struct FreeAbelianBase {
    IntMatrix M;
    Int det;
    explicit FreeAbelianBase(IntMatrix m) : M(std::move(m)), det(M.det()) {
        if (M.rows() != M.cols())
            throw std::invalid_argument("endomorphism matrix must be square");
        if (det == 0 || det == 1 || det == -1)
            throw std::invalid_argument("endomorphism matrix must have |det| >= 2");
    }
    std::size_t rank() const { return M.rows(); }
};

// element a*s^i of the wreath product Z wr Z, with a in Z^infty kept as a
// Laurent polynomial (a_i <-> x^i) and i the shift exponent
struct WreathElement {
    LaurentPoly a;
    long long shift = 0;
    friend bool operator==(const WreathElement &x, const WreathElement &y) {
        return x.shift == y.shift && x.a == y.a;
    }
};

using BaseElement = std::variant<IntVector, WreathElement>;

class GroupSpec {
  public:
    enum class Kind { FreeAbelian, Wreath };

    // theta(u) = u^5 v^-1, theta(v) = u^2 on Z x Z
    static GroupSpec thm21() {
        IntMatrix m(2, 2);
        m.at(0, 0) = 5;
        m.at(0, 1) = 2;
        m.at(1, 0) = -1;
        m.at(1, 1) = 0;
        return free_abelian(std::move(m));
    }
    static GroupSpec free_abelian(IntMatrix m) { return GroupSpec(FreeAbelianBase(std::move(m))); }
    // Baumslag-Remeslennikov group: base Z wr Z, theta(s)=s, theta(a_i)=a_i a_{i+1}
    static GroupSpec baumslag_remeslennikov() { return GroupSpec(Kind::Wreath); }

    Kind kind() const { return kind_; }
    const FreeAbelianBase &abelian() const {
        if (kind_ != Kind::FreeAbelian)
            throw std::invalid_argument("group has no free-abelian base");
        return *abelian_;
    }
    std::size_t rank() const { return abelian().rank(); }

    friend bool operator==(const GroupSpec &a, const GroupSpec &b) {
        if (a.kind_ != b.kind_)
            return false;
        if (a.kind_ == Kind::Wreath)
            return true;
        return a.abelian_->M == b.abelian_->M;
    }

  private:
    explicit GroupSpec(Kind k) : kind_(k) {}
    explicit GroupSpec(FreeAbelianBase b) : kind_(Kind::FreeAbelian), abelian_(std::move(b)) {}
    Kind kind_;
    std::optional<FreeAbelianBase> abelian_;
};

BaseElement base_identity(const GroupSpec &g);
bool base_is_identity(const BaseElement &w);
BaseElement base_mul(const GroupSpec &g, const BaseElement &x, const BaseElement &y);
BaseElement base_inv(const GroupSpec &g, const BaseElement &x);
BaseElement theta_apply(const GroupSpec &g, const BaseElement &x);
std::optional<BaseElement> theta_preimage(const GroupSpec &g, const BaseElement &x);
BaseElement theta_power(const GroupSpec &g, const BaseElement &x, long long n); // n >= 0

// a[i] = (x^i, 0) in the wreath base
WreathElement wreath_generator(long long index);

void check_tag(const GroupSpec &g, const BaseElement &x);

} // namespace solhnn
