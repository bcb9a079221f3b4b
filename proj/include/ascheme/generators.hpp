#pragma once

#include "ascheme/graphs.hpp"
#include "ascheme/schemes.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ascheme {

enum class Family { Cycle, Complete, Petersen, HoffmanSingleton, Paley, Johnson, Hamming };

/// A catalog family with its integer arguments:
///   cycle n, complete n, petersen, hoffman_singleton, paley q,
///   johnson n k, hamming d q.
struct FamilySpec {
    Family family;
    std::vector<int> params;

    /// Throws DomainError when the arguments are outside the family's domain.
    void validate() const;
    std::string name() const;
    /// Number of points; exact, throws OverflowError.
    std::uint64_t point_count() const;
};

std::string_view family_name(Family f) noexcept;
Family family_from_name(std::string_view name);
FamilySpec parse_family(std::string_view name, const std::vector<int>& params);

Graph build_graph(const FamilySpec& spec, std::size_t max_dense = kDefaultMaxDense);
RelationPartition build_scheme(const FamilySpec& spec, std::size_t max_dense = kDefaultMaxDense);

/// Relation partition by graph distance; throws when the graph is disconnected.
RelationPartition distance_partition(const Graph& g);

/// Intersection numbers of J(n,k) or H(d,q) counted combinatorially.
IntersectionNumbers family_intersection_numbers(const FamilySpec& spec);

/// Closed-form degrees, eigenvalues of the first relation and multiplicities
/// for the Johnson and Hamming families.
struct ClosedForm {
    std::uint64_t points = 0;
    std::vector<std::int64_t> degrees;
    std::vector<std::int64_t> first_eigenvalues;  // P_1(j)
    std::vector<std::int64_t> multiplicities;
};
ClosedForm closed_form(const FamilySpec& spec);

/// Parameters for Johnson/Hamming without building matrices: the
/// intersection tensor goes through the parametric path and the result is
/// checked against the closed forms.
SchemeParameters family_parameters(const FamilySpec& spec, double tol = kDefaultTol);

std::vector<FamilySpec> catalog_graphs();
std::vector<FamilySpec> catalog_schemes();

} // namespace ascheme
