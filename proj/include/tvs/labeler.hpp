#ifndef TVS_LABELER_HPP
#define TVS_LABELER_HPP

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "tvs/classify.hpp"
#include "tvs/forest.hpp"

namespace tvs {

// A phase failure is a falsification signal, never expected on inputs that
// satisfy the theorem hypotheses.
struct ConstructionError : std::runtime_error {
    std::string phase;
    ConstructionError(std::string phase_, const std::string& what)
        : std::runtime_error(phase_ + ": " + what), phase(std::move(phase_)) {}
};

// The ordered pool (1, s-1, 2, s-2, ...) over 1..s-1. Front draws come in
// pairs summing to s; tail draws are single values from the back.
class ValueList {
public:
    explicit ValueList(int s);

    const std::vector<int>& order() const { return order_; }
    int strength() const { return s_; }
    int remaining() const { return back_ - front_ + 1; }

    std::pair<int, int> pop_front_pair();
    int pop_tail();

private:
    int s_;
    std::vector<int> order_;
    int front_ = 0;
    int back_ = -1;
};

ValueList build_value_list(int s);

enum class Variant { v1, v2 };  // label (j-1)/2 resp. (j+1)/2 pendant edges with s

struct VariantPlan {
    std::map<int, Variant> variant;   // odd-j vertices of degree >= 3 only
    std::vector<int> forced_s_edges;  // pendant edges at the degree-2 vertex
    int isolated_ones = 0;            // isolated edges labeled 1 (rest get s)
    int planned_pendant_s = 0;        // P
};

// Incident edge label sum of a non-pendant vertex, as B*s + delta*tail_value.
struct BaseDecomposition {
    int b = 0;
    int tail_delta = 0;
    int tail_value = 0;
    int edge_sum(int s) const { return b * s + tail_delta * tail_value; }
};

struct TotalWeighting {
    int s = 0;
    Mode mode = Mode::theorem1;
    std::vector<int> edge_label;    // by edge id; 0 = unassigned
    std::vector<int> vertex_label;  // by vertex id; 0 = unassigned
};

struct LabelerState {
    const Forest* forest = nullptr;
    const ClassTable* classes = nullptr;
    int s = 0;
    Mode mode = Mode::theorem1;
    int degree_two_vertex = -1;  // theorem2 only
    TotalWeighting tw;
    ValueList pool{2};
    std::map<int, BaseDecomposition> base;       // non-pendant vertices
    std::set<int> used_pendant_totals;           // [2, 2s]
    std::set<int> used_midrange_totals;          // [2s+2, 3s]
    std::set<int> midrange_overflow_totals;      // 3s + w(e), blocked in highrange
    std::set<int> highrange_fixed_totals;        // 4s + w(e), blocked in toprange
    std::set<int> used_high_totals;              // everything assigned >= 3s+1
};

VariantPlan select_variants(const Forest& f, const ClassTable& ct, int s, Mode mode);

LabelerState assign_edge_labels(const Forest& f, const ClassTable& ct, const VariantPlan& plan,
                                int s, Mode mode);

void weight_pendant_vertices(LabelerState& st);
void weight_midrange(LabelerState& st);
void weight_highrange(LabelerState& st);
void weight_toprange(LabelerState& st);
void weight_degree_two_vertex(LabelerState& st, int v);

// Full pipeline. Mode::any resolves to theorem1 (n2=0) or theorem2 (n2=1).
TotalWeighting construct(const Forest& f, Mode mode = Mode::any);

}  // namespace tvs

#endif
