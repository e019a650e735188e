#include "weyr/json_io.hpp"

#include <stdexcept>

namespace weyr {

json to_json(const Scalar& s) { return s.str(); }

Scalar scalar_from_json(const json& j) {
    if (!j.is_string()) throw std::invalid_argument("scalar must be a string");
    return Scalar::parse(j.get<std::string>());
}

json to_json(const ExactMatrix& m) {
    json entries = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) entries.push_back(m.at(r, c).str());
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

ExactMatrix matrix_from_json(const json& j) {
    std::size_t rows = j.at("rows").get<std::size_t>();
    std::size_t cols = j.at("cols").get<std::size_t>();
    const json& entries = j.at("entries");
    if (entries.size() != rows * cols)
        throw std::invalid_argument("matrix entry count does not match dimensions");
    ExactMatrix m(rows, cols);
    std::size_t k = 0;
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = scalar_from_json(entries[k++]);
    return m;
}

json to_json(const PatternMatrix& p) {
    json grid = json::array();
    for (std::size_t r = 0; r < p.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < p.cols(); ++c)
            row.push_back(p.is_param(r, c) ? "p" + std::to_string(p.param_id(r, c))
                                           : "0");
        grid.push_back(row);
    }
    return {{"rows", p.rows()}, {"cols", p.cols()}, {"grid", grid}};
}

PatternMatrix pattern_from_json(const json& j) {
    std::size_t rows = j.at("rows").get<std::size_t>();
    std::size_t cols = j.at("cols").get<std::size_t>();
    PatternMatrix p(rows, cols);
    const json& grid = j.at("grid");
    if (grid.size() != rows)
        throw std::invalid_argument("pattern grid row count mismatch");
    for (std::size_t r = 0; r < rows; ++r) {
        if (grid[r].size() != cols)
            throw std::invalid_argument("pattern grid column count mismatch");
        for (std::size_t c = 0; c < cols; ++c) {
            std::string cell = grid[r][c].get<std::string>();
            if (cell != "0") p.set_param(r, c);
        }
    }
    p.renumber();
    return p;
}

json to_json(const BlockPartition& bp) {
    return {{"row_sizes", bp.row_sizes}, {"col_sizes", bp.col_sizes}};
}

BlockPartition partition_from_json(const json& j) {
    BlockPartition bp;
    bp.row_sizes = j.at("row_sizes").get<std::vector<std::size_t>>();
    bp.col_sizes = j.at("col_sizes").get<std::vector<std::size_t>>();
    return bp;
}

json to_json(const Permutation& p) {
    json image = json::array();
    for (std::size_t v : p.image) image.push_back(v + 1);  // 1-based outside
    return {{"image", image}};
}

Permutation permutation_from_json(const json& j) {
    Permutation p;
    for (const auto& v : j.at("image")) {
        std::size_t x = v.get<std::size_t>();
        if (x == 0) throw std::invalid_argument("permutation images are 1-based");
        p.image.push_back(x - 1);
    }
    if (!p.is_valid()) throw std::invalid_argument("not a permutation");
    return p;
}

json to_json(const SegreStructure& s) {
    json eigs = json::array();
    for (const auto& eb : s.eigenvalues)
        eigs.push_back({{"re", eb.value.re.get_str()},
                        {"im", eb.value.im.get_str()},
                        {"sizes", eb.sizes}});
    return {{"eigenvalues", eigs}};
}

SegreStructure segre_from_json(const json& j) {
    SegreStructure s;
    for (const auto& e : j.at("eigenvalues")) {
        EigenBlock eb;
        Rational re(e.at("re").get<std::string>());
        Rational im(e.value("im", std::string("0")));
        re.canonicalize();
        im.canonicalize();
        eb.value = Scalar(re, im);
        eb.sizes = e.at("sizes").get<std::vector<std::size_t>>();
        s.eigenvalues.push_back(std::move(eb));
    }
    s.validate();
    return s;
}

json to_json(const PencilStructure& ps) {
    return {{"left_indices", ps.left_indices},
            {"right_indices", ps.right_indices},
            {"regular", to_json(ps.regular)},
            {"infinite", ps.infinite}};
}

PencilStructure pencil_from_json(const json& j) {
    PencilStructure ps;
    ps.left_indices = j.value("left_indices", std::vector<std::size_t>{});
    ps.right_indices = j.value("right_indices", std::vector<std::size_t>{});
    if (j.contains("regular")) ps.regular = segre_from_json(j.at("regular"));
    ps.infinite = j.value("infinite", std::vector<std::size_t>{});
    ps.validate();
    return ps;
}

json to_json(const ContraStructure& cs) {
    return {{"regular", to_json(cs.regular)},
            {"left_indices", cs.left_indices},
            {"ab_zero", cs.ab_zero},
            {"ba_zero", cs.ba_zero},
            {"right_indices", cs.right_indices}};
}

ContraStructure contra_from_json(const json& j) {
    ContraStructure cs;
    if (j.contains("regular")) cs.regular = segre_from_json(j.at("regular"));
    cs.left_indices = j.value("left_indices", std::vector<std::size_t>{});
    cs.ab_zero = j.value("ab_zero", std::vector<std::size_t>{});
    cs.ba_zero = j.value("ba_zero", std::vector<std::size_t>{});
    cs.right_indices = j.value("right_indices", std::vector<std::size_t>{});
    cs.validate();
    return cs;
}

json to_json(const Template& t) {
    return {{"base", to_json(t.base)},
            {"pattern", to_json(t.pattern)},
            {"partition", to_json(t.partition)}};
}

Template template_from_json(const json& j) {
    Template t;
    t.base = matrix_from_json(j.at("base"));
    t.pattern = pattern_from_json(j.at("pattern"));
    t.partition = partition_from_json(j.at("partition"));
    t.check();
    return t;
}

json to_json(const TemplatePair& tp) {
    return {{"first", to_json(tp.first)}, {"second", to_json(tp.second)}};
}

TemplatePair pair_from_json(const json& j) {
    TemplatePair tp;
    tp.first = template_from_json(j.at("first"));
    tp.second = template_from_json(j.at("second"));
    return tp;
}

json to_json(const VersalityReport& r) {
    return {{"total_dim", r.total_dim},
            {"tangent_rank", r.tangent_rank},
            {"param_count", r.param_count},
            {"versal", r.versal},
            {"miniversal", r.miniversal}};
}

VersalityReport report_from_json(const json& j) {
    VersalityReport r;
    r.total_dim = j.at("total_dim").get<std::size_t>();
    r.tangent_rank = j.at("tangent_rank").get<std::size_t>();
    r.param_count = j.at("param_count").get<std::size_t>();
    r.versal = j.at("versal").get<bool>();
    r.miniversal = j.at("miniversal").get<bool>();
    return r;
}

json to_json(const FloatMatrix& m) {
    json entries = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r)
        for (Eigen::Index c = 0; c < m.cols(); ++c)
            entries.push_back({{"re", m(r, c).real()}, {"im", m(r, c).imag()}});
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

FloatMatrix float_matrix_from_json(const json& j) {
    auto rows = j.at("rows").get<Eigen::Index>();
    auto cols = j.at("cols").get<Eigen::Index>();
    const json& entries = j.at("entries");
    if (static_cast<Eigen::Index>(entries.size()) != rows * cols)
        throw std::invalid_argument("matrix entry count does not match dimensions");
    FloatMatrix m(rows, cols);
    std::size_t k = 0;
    for (Eigen::Index r = 0; r < rows; ++r)
        for (Eigen::Index c = 0; c < cols; ++c) {
            const json& e = entries[k++];
            if (e.is_number()) {
                m(r, c) = e.get<double>();
            } else {
                m(r, c) = {e.value("re", 0.0), e.value("im", 0.0)};
            }
        }
    return m;
}

json to_json(const ReductionResult& r) {
    json params = json::array();
    for (const auto& p : r.params)
        params.push_back({{"re", p.real()}, {"im", p.imag()}});
    const char* status = r.status == ReduceStatus::Converged ? "converged"
                         : r.status == ReduceStatus::NoConvergence
                             ? "no_convergence"
                             : "singular_transform";
    return {{"transform", to_json(r.transform)},
            {"params", params},
            {"residual", r.residual},
            {"iterations", r.iterations},
            {"status", status}};
}

}  // namespace weyr
