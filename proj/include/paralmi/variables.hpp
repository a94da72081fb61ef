#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "paralmi/error.hpp"

namespace paralmi {

// Variable groups of the ambient rings: parameters y, primal x, kernel
// coordinates u, Lagrange multipliers l, the saturation variable z and a
// scratch auxiliary kind.
enum class VarKind : uint8_t { X = 0, Y = 1, U = 2, Lambda = 3, Z = 4, Aux = 5 };

// Packed variable id. Indices are 1-based. The numeric packing fixes the
// canonical variable importance: x1 > x2 > ... > y1 > ... > u... > l... > z.
struct Var {
    uint32_t id = 0;

    Var() = default;
    Var(VarKind kind, uint32_t index) : id((static_cast<uint32_t>(kind) << 24) | index) {}

    VarKind kind() const { return static_cast<VarKind>(id >> 24); }
    uint32_t index() const { return id & 0xffffffu; }

    friend bool operator==(Var a, Var b) { return a.id == b.id; }
    friend bool operator!=(Var a, Var b) { return a.id != b.id; }
    friend bool operator<(Var a, Var b) { return a.id < b.id; }
    friend bool operator>(Var a, Var b) { return a.id > b.id; }
};

inline Var var_x(uint32_t i) { return Var(VarKind::X, i); }
inline Var var_y(uint32_t i) { return Var(VarKind::Y, i); }
inline Var var_u(uint32_t i) { return Var(VarKind::U, i); }
inline Var var_lambda(uint32_t i) { return Var(VarKind::Lambda, i); }
inline Var var_z(uint32_t i) { return Var(VarKind::Z, i); }
inline Var var_aux(uint32_t i) { return Var(VarKind::Aux, i); }

inline std::string var_name(Var v) {
    switch (v.kind()) {
        case VarKind::X: return "x" + std::to_string(v.index());
        case VarKind::Y: return "y" + std::to_string(v.index());
        case VarKind::U: return "u" + std::to_string(v.index());
        case VarKind::Lambda: return "l" + std::to_string(v.index());
        case VarKind::Z: return "z" + std::to_string(v.index());
        case VarKind::Aux: return "T" + std::to_string(v.index());
    }
    return "?";
}

// Per-session variable declaration: how many variables of each kind exist.
// Values are immutable once a computation starts.
struct VarSpace {
    uint32_t n = 0;     // primal x
    uint32_t t = 0;     // parameters y
    uint32_t u = 0;     // incidence u
    uint32_t lam = 0;   // multipliers
    uint32_t z = 0;     // saturation
    uint32_t aux = 0;

    uint32_t count(VarKind k) const {
        switch (k) {
            case VarKind::X: return n;
            case VarKind::Y: return t;
            case VarKind::U: return u;
            case VarKind::Lambda: return lam;
            case VarKind::Z: return z;
            case VarKind::Aux: return aux;
        }
        return 0;
    }

    bool contains(Var v) const { return v.index() >= 1 && v.index() <= count(v.kind()); }

    std::vector<Var> vars_of(VarKind k) const {
        std::vector<Var> out;
        out.reserve(count(k));
        for (uint32_t i = 1; i <= count(k); ++i) out.emplace_back(k, i);
        return out;
    }

    std::vector<Var> x_vars() const { return vars_of(VarKind::X); }
    std::vector<Var> y_vars() const { return vars_of(VarKind::Y); }
};

}  // namespace paralmi
