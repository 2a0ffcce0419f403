#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wb/algebra.hpp"
#include "wb/models.hpp"

namespace wb {

enum class Side { Right, Left };

// Points carry finite lists of representative realizers.  `accepts` decides
// membership of an arbitrary element in the realizer set of a point; by
// default it is equality with one of the representatives.
struct Assembly {
    std::string name;
    std::vector<std::string> points;
    std::vector<std::vector<Elem>> reps;
    std::function<bool(size_t, const Elem&)> accepts;

    size_t size() const { return points.size(); }
    std::optional<size_t> index_of(const std::string& p) const;
};

Assembly make_assembly(const ApplicativeStructure& a, std::string name, std::vector<std::string> points,
                       std::vector<std::vector<Elem>> reps);
// same points, realizers t a
Assembly image_assembly(const ApplicativeStructure& a, const Assembly& x, const Elem& t, const std::string& name);
// points pairs, realizers p q (application, not pairing)
Assembly app_assembly(const ApplicativeStructure& a, const Assembly& x, const Assembly& y, const std::string& name);
Assembly unit_assembly(const ApplicativeStructure& a, const Elem& i);
// realizers pair(p, q) for the given pairing
using Pairing = std::function<std::optional<Elem>(const Elem&, const Elem&)>;
Assembly tensor_assembly(const ApplicativeStructure& a, const Assembly& x, const Assembly& y, const Pairing& pair);
Pairing pairing_P(const ApplicativeStructure& a, const Signature& sig);

// Point maps of a hom object are functions from points of X to points of Y.
using PointMap = std::vector<size_t>;
std::string show_point_map(const Assembly& x, const Assembly& y, const PointMap& f);

bool tracks(const ApplicativeStructure& a, const Elem& r, const Assembly& x, const Assembly& y, const PointMap& f,
            Side side = Side::Right);

// The hom object restricted to the listed maps.  Membership is "tracks the
// map"; the representatives are whatever the caller knows to realize it.
Assembly hom_assembly(const ApplicativeStructure& a, const Assembly& x, const Assembly& y,
                      std::vector<std::pair<PointMap, std::vector<Elem>>> maps, Side side, const std::string& name);
std::optional<size_t> hom_index(const Assembly& hom, const std::string& point_name);

bool is_modest(const ApplicativeStructure& a, const Assembly& x);
bool nonempty(const Assembly& x);

struct AssemblyMap {
    std::string name;
    const Assembly* source;
    const Assembly* target;
    PointMap f;
    Elem realizer;
    Side side = Side::Right;
};

struct MapReport {
    bool ok = false;
    size_t checked = 0;
    std::string witness;
};

MapReport check_map(const ApplicativeStructure& a, const AssemblyMap& m);

constexpr size_t kUniverseCap = 500;
std::optional<Elem> search_realizer(const ApplicativeStructure& a, const PointMap& f, const Assembly& x,
                                    const Assembly& y, const std::vector<Elem>& universe, size_t cap = kUniverseCap);

struct SuiteItem {
    std::string datum;
    bool ok = false;
    std::string detail;
};

struct SuiteReport {
    std::string structure;
    std::vector<std::string> classes;
    std::vector<SuiteItem> items;
    size_t composition_pairs = 0;
    bool ok() const;
};

// Realizer recipes for closed multicategories, closed categories, monoidal
// closed and monoidal bi-closed categories, each checked pointwise on the
// given assemblies and assemblies derived from them.
SuiteReport closed_structure_suite(const ApplicativeStructure& a, const Assembly& x, const Assembly& y,
                                   const Assembly& z);

// fixed 2- and 3-point assemblies over the named term models
struct FixedAssemblies {
    Assembly x, y, z;
};
FixedAssemblies fixed_assemblies(const TermModel& m);

// The tensor of two modest assemblies over T' that is not modest.
struct NonModestWitness {
    bool x_modest, y_modest, tensor_modest;
    std::string detail;
};
NonModestWitness non_modest_tensor_witness(const TreeModel& tprime);

// `model NAME` then `assembly NAME` blocks of `point NAME: term ; term` lines
struct AssemblyFile {
    std::string model;
    std::vector<Assembly> assemblies;
};
AssemblyFile parse_assembly_file(const std::string& text, const TermModel& m);

// ---------------------------------------------------------------- morphisms

struct MorphismReport {
    bool ok = false;
    size_t checked = 0;
    std::string witness;
};

// r (rel a) (rel a') within rel (a a') on sampled pairs
MorphismReport check_morphism(const MorphismSpec& m, const std::vector<Elem>& samples);
// r (rel a) within expect(a) on samples; the relation side of a preorder condition
MorphismReport check_below(const ApplicativeStructure& target, const Elem& r,
                           const std::function<Elem(const Elem&)>& lhs_rel,
                           const std::function<Elem(const Elem&)>& rhs_rel, const std::vector<Elem>& samples);

struct AdjointReport {
    MorphismReport gamma, delta, below_id, above_id;
    bool ok() const { return gamma.ok && delta.ok && below_id.ok && above_id.ok; }
};
AdjointReport check_adjoint(const TeAdjoint& p, const std::vector<Elem>& t_samples, const std::vector<Elem>& te_samples);

}  // namespace wb
