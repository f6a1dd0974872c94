#pragma once

// The rational cone attached to a base partition: one generator per
// composition of the rank, exact membership, a deterministic simplicial
// triangulation, the finite remainder set of each fundamental domain, and
// the integral decomposition of cone points against the scaled generators.

#include "core/linalg.hpp"
#include "core/partition.hpp"

#include <vector>

namespace domcert {

struct ConeGenerator {
    Composition label;   // lexicographically smallest composition producing it
    RatVec vector;       // blockwise averages of the base, weight preserved
    Partition scaled;    // the vector times lcm(1..rank), always integral
};

// A simplicial subcone of the triangulation: the spanning generators by
// index, plus an exact solver with tau = (solve_num * b) / solve_den.
struct Subcone {
    std::vector<int> members;
    IntMat solve_num;
    Int solve_den;
};

struct DecompositionTerm {
    Composition label;
    Partition generator;  // scaled generator
    Part mult;
};

// target = remainder + sum of mult * generator over terms, with the
// remainder inside the fundamental domain of the subcone that was used.
struct Decomposition {
    Partition base;
    Partition target;
    Partition remainder;
    std::vector<DecompositionTerm> terms;

    Part multiplier_sum() const;
};

class DominanceCone {
public:
    // The base must be non-zero: the cone of the zero partition is the
    // origin and has no generators or fundamental domain.
    explicit DominanceCone(const Partition& a);

    const Partition& base() const { return base_; }
    Part scale() const { return scale_; }  // lcm(1..rank)
    int dimension() const { return dim_; }
    const std::vector<ConeGenerator>& generators() const { return generators_; }
    const std::vector<Subcone>& subcones() const { return subcones_; }

    bool member(const Partition& b) const;

    // Locates the first subcone containing the target in canonical order,
    // floors its exact coordinates, and returns the integral decomposition.
    Decomposition decompose(const Partition& b) const;

    // Integer partitions of the half-open fundamental parallelepipeds of
    // all subcones, plus zero; sorted and duplicate-free.
    std::vector<Partition> sigma() const;

private:
    Partition base_;
    Part scale_ = 1;
    int dim_ = 0;
    std::vector<ConeGenerator> generators_;
    std::vector<Subcone> subcones_;
};

ConeGenerator cone_generator(const Partition& a, const Composition& L);

// Non-increasing, non-negative, and scale-dominated by the base; the zero
// vector is always a member and the zero base admits only the zero vector.
bool cone_member(const Partition& a, const Partition& b);
bool cone_member(const Partition& a, const RatVec& b);

// Vertices of the cone's cross-section polytope at the weight of the base:
// the distinct generator vectors, in canonical order.
std::vector<RatVec> polytope_vertices(const Partition& a);

std::vector<Partition> sigma_set(const Partition& a);
Decomposition decompose(const Partition& a, const Partition& b);

}  // namespace domcert
