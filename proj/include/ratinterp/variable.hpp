#pragma once

#include <compare>
#include <string>
#include <tuple>

namespace ratinterp {

// The indexed families of the interpolation grid (X, C), the auxiliary
// B-family used by specialization-style checks, and free named scalars
// (q, p, a, b, ...). Order X < C < B < Scalar, then index/name; this fixes
// the canonical term order everywhere.
enum class Family : unsigned char { X = 0, C = 1, B = 2, Scalar = 3 };

class Variable {
public:
    static Variable x(int i) { return Variable(Family::X, i, {}); }
    static Variable c(int i) { return Variable(Family::C, i, {}); }
    static Variable b(int i) { return Variable(Family::B, i, {}); }
    static Variable indexed(Family f, int i) { return Variable(f, i, {}); }
    static Variable scalar(std::string name) { return Variable(Family::Scalar, 0, std::move(name)); }

    Family family() const { return family_; }
    int index() const { return index_; }
    const std::string& name() const { return name_; }

    bool operator==(const Variable& o) const = default;
    auto operator<=>(const Variable& o) const {
        return std::tie(family_, index_, name_) <=> std::tie(o.family_, o.index_, o.name_);
    }

    std::string str() const {
        switch (family_) {
            case Family::X: return "x" + std::to_string(index_);
            case Family::C: return "c" + std::to_string(index_);
            case Family::B: return "b" + std::to_string(index_);
            default: return name_;
        }
    }

private:
    Variable(Family f, int i, std::string n) : family_(f), index_(i), name_(std::move(n)) {}
    Family family_;
    int index_;
    std::string name_;
};

} // namespace ratinterp
