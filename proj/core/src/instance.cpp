#include "ccopt/instance.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "ccopt/errors.hpp"

namespace ccopt {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw ParseError(where + ": " + what);
}

const json& field(const json& obj, const std::string& where, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end())
        fail(where, std::string("missing required key \"") + key + "\"");
    return *it;
}

void check_keys(const json& obj, const std::string& where,
                std::initializer_list<const char*> allowed) {
    for (const auto& el : obj.items()) {
        bool known = false;
        for (const char* k : allowed)
            if (el.key() == k) {
                known = true;
                break;
            }
        if (!known)
            fail(where, "unknown key \"" + el.key() + "\"");
    }
}

std::size_t get_count(const json& v, const std::string& where, long long min_value) {
    if (!v.is_number_integer())
        fail(where, "expected an integer");
    const long long x = v.get<long long>();
    if (x < min_value)
        fail(where, "expected an integer >= " + std::to_string(min_value));
    return static_cast<std::size_t>(x);
}

Rational get_rational(const json& v, const std::string& where) {
    if (v.is_number())
        fail(where, "rationals must be strings like \"3\" or \"1/2\", never numbers");
    if (!v.is_string())
        fail(where, "expected a rational string");
    try {
        return Rational::parse(v.get<std::string>());
    } catch (const ParseError& e) {
        fail(where, e.what());
    }
}

RatVector get_vector(const json& v, const std::string& where) {
    if (!v.is_array() || v.empty())
        fail(where, "expected a nonempty array of rational strings");
    RatVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = get_rational(v[i], where + "[" + std::to_string(i) + "]");
    return out;
}

std::vector<RatVector> get_points(const json& v, const std::string& where) {
    if (!v.is_array() || v.empty())
        fail(where, "expected a nonempty array of points");
    std::vector<RatVector> pts;
    pts.reserve(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        pts.push_back(get_vector(v[i], where + "[" + std::to_string(i) + "]"));
        if (pts.back().dim() != pts.front().dim())
            fail(where, "points of unequal dimension");
    }
    return pts;
}

std::vector<std::size_t> get_counts(const json& v, const std::string& where,
                                    std::size_t expected) {
    if (!v.is_array() || v.size() != expected)
        fail(where, "expected an array of " + std::to_string(expected) + " integers");
    std::vector<std::size_t> out;
    out.reserve(expected);
    for (std::size_t i = 0; i < v.size(); ++i)
        out.push_back(get_count(v[i], where + "[" + std::to_string(i) + "]", 0));
    return out;
}

MatroidSpec parse_matroid(const json& fam, const std::string& where) {
    const json& mode_v = field(fam, where, "mode");
    MatroidMode mode;
    if (mode_v.is_string() && mode_v.get<std::string>() == "bases")
        mode = MatroidMode::Bases;
    else if (mode_v.is_string() && mode_v.get<std::string>() == "independent")
        mode = MatroidMode::Independent;
    else
        fail(where + ".mode", "expected \"bases\" or \"independent\"");

    const json& var_v = field(fam, where, "variant");
    if (!var_v.is_string())
        fail(where + ".variant", "expected \"uniform\", \"graphic\" or \"linear\"");
    const std::string variant = var_v.get<std::string>();

    if (variant == "uniform") {
        check_keys(fam, where, {"kind", "variant", "mode", "rank", "n"});
        const std::size_t n = get_count(field(fam, where, "n"), where + ".n", 1);
        const std::size_t rank = get_count(field(fam, where, "rank"), where + ".rank", 0);
        if (rank > n)
            fail(where + ".rank", "rank exceeds the ground size");
        return MatroidSpec::uniform(rank, n, mode);
    }
    if (variant == "graphic") {
        check_keys(fam, where, {"kind", "variant", "mode", "vertices", "edges"});
        const std::size_t vertices =
            get_count(field(fam, where, "vertices"), where + ".vertices", 1);
        const json& edges_v = field(fam, where, "edges");
        if (!edges_v.is_array() || edges_v.empty())
            fail(where + ".edges", "expected a nonempty array of [u, v] vertex pairs");
        std::vector<std::pair<std::size_t, std::size_t>> edges;
        edges.reserve(edges_v.size());
        for (std::size_t i = 0; i < edges_v.size(); ++i) {
            const std::string here = where + ".edges[" + std::to_string(i) + "]";
            const json& e = edges_v[i];
            if (!e.is_array() || e.size() != 2)
                fail(here, "expected a [u, v] vertex pair");
            const std::size_t u = get_count(e[0], here + "[0]", 1);
            const std::size_t v = get_count(e[1], here + "[1]", 1);
            if (u > vertices || v > vertices)
                fail(here, "edge endpoint exceeds the vertex count");
            edges.emplace_back(u, v);
        }
        return MatroidSpec::graphic(vertices, std::move(edges), mode);
    }
    if (variant == "linear") {
        check_keys(fam, where, {"kind", "variant", "mode", "columns"});
        const auto cols = get_points(field(fam, where, "columns"), where + ".columns");
        RatMatrix m(cols[0].dim(), cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j)
            for (std::size_t i = 0; i < cols[j].dim(); ++i)
                m.at(i, j) = cols[j][i];
        return MatroidSpec::linear(std::move(m), mode);
    }
    fail(where + ".variant", "unknown variant \"" + variant + "\"");
}

/// Dimension of the weight space the objective lives in.
std::size_t weighting_dim(const InstanceFile& f) {
    switch (f.kind) {
    case InstanceFile::FamilyKind::PowerSet:
    case InstanceFile::FamilyKind::Matroid:
        return f.weighting ? f.weighting->d : 0;
    case InstanceFile::FamilyKind::ShapedPartition:
        return f.partition->points[0].dim() * f.partition->p;
    case InstanceFile::FamilyKind::Clustering:
        return f.clustering->points[0].dim() * f.clustering->p;
    }
    return 0;
}

json vector_json(const RatVector& v) {
    json a = json::array();
    for (const auto& x : v)
        a.push_back(x.str());
    return a;
}

json points_json(const std::vector<RatVector>& pts) {
    json a = json::array();
    for (const auto& p : pts)
        a.push_back(vector_json(p));
    return a;
}

ConvexObjective make_objective(const InstanceFile& f) {
    switch (f.objective) {
    case ConvexObjective::Kind::SquaredL2:
        return ConvexObjective::squared_l2();
    case ConvexObjective::Kind::Linear:
        return ConvexObjective::linear(f.objective_coeffs);
    case ConvexObjective::Kind::MaxCoordinate:
        return ConvexObjective::max_coordinate();
    case ConvexObjective::Kind::Custom:
        break;
    }
    throw std::invalid_argument("custom objectives cannot be described in a file");
}

} // namespace

std::size_t InstanceFile::ground_size() const {
    switch (kind) {
    case FamilyKind::PowerSet:
        return powerset_n;
    case FamilyKind::Matroid:
        return matroid ? matroid->n : 0;
    case FamilyKind::ShapedPartition:
        return partition ? partition->points.size() * partition->p : 0;
    case FamilyKind::Clustering:
        return clustering ? clustering->points.size() * clustering->p : 0;
    }
    return 0;
}

InstanceFile parse_instance(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!root.is_object())
        throw ParseError("instance: expected a JSON object");
    check_keys(root, "instance", {"version", "family", "weighting", "objective", "options"});

    InstanceFile f;
    f.version = static_cast<int>(get_count(field(root, "instance", "version"), "version", 0));
    if (f.version != 1)
        fail("version", "unsupported version " + std::to_string(f.version) +
                            "; this reader understands version 1");

    const json& fam = field(root, "instance", "family");
    if (!fam.is_object())
        fail("family", "expected an object");
    const json& kind_v = field(fam, "family", "kind");
    if (!kind_v.is_string())
        fail("family.kind", "expected a string");
    const std::string kind = kind_v.get<std::string>();

    if (kind == "powerset") {
        check_keys(fam, "family", {"kind", "n"});
        f.kind = InstanceFile::FamilyKind::PowerSet;
        f.powerset_n = get_count(field(fam, "family", "n"), "family.n", 1);
    } else if (kind == "matroid") {
        f.kind = InstanceFile::FamilyKind::Matroid;
        f.matroid = parse_matroid(fam, "family");
    } else if (kind == "shaped_partition") {
        check_keys(fam, "family", {"kind", "points", "p", "l", "u"});
        InstanceFile::PartitionBlock b;
        b.points = get_points(field(fam, "family", "points"), "family.points");
        b.p = get_count(field(fam, "family", "p"), "family.p", 1);
        b.lower = get_counts(field(fam, "family", "l"), "family.l", b.p);
        b.upper = get_counts(field(fam, "family", "u"), "family.u", b.p);
        for (std::size_t j = 0; j < b.p; ++j)
            if (b.lower[j] > b.upper[j] || b.upper[j] > b.points.size())
                fail("family", "shape bounds must satisfy l <= u <= n; column " +
                                   std::to_string(j + 1) + " does not");
        f.kind = InstanceFile::FamilyKind::ShapedPartition;
        f.partition = std::move(b);
    } else if (kind == "clustering") {
        check_keys(fam, "family", {"kind", "points", "p", "m"});
        InstanceFile::ClusteringBlock c;
        c.points = get_points(field(fam, "family", "points"), "family.points");
        c.p = get_count(field(fam, "family", "p"), "family.p", 1);
        c.m = get_count(field(fam, "family", "m"), "family.m", 1);
        f.kind = InstanceFile::FamilyKind::Clustering;
        f.clustering = std::move(c);
    } else {
        fail("family.kind", "unknown family \"" + kind + "\"");
    }

    const bool implied_weighting = f.kind == InstanceFile::FamilyKind::ShapedPartition ||
                                   f.kind == InstanceFile::FamilyKind::Clustering;
    auto wit = root.find("weighting");
    if (implied_weighting) {
        if (wit != root.end() && !wit->is_null())
            fail("weighting", "this family implies its weighting; omit the block");
    } else {
        if (wit == root.end() || wit->is_null())
            fail("weighting", "an explicit weighting table is required for this family");
        auto rows = get_points(*wit, "weighting");
        if (rows.size() != f.ground_size())
            fail("weighting", "expected " + std::to_string(f.ground_size()) +
                                  " rows (one per ground element), got " +
                                  std::to_string(rows.size()));
        f.weighting = VectorWeighting(std::move(rows));
    }

    auto oit = root.find("objective");
    if (oit == root.end() || oit->is_null()) {
        if (f.kind != InstanceFile::FamilyKind::Clustering)
            fail("objective", "an objective block is required");
        f.objective = ConvexObjective::Kind::SquaredL2; // implied by clustering
    } else {
        if (!oit->is_object())
            fail("objective", "expected an object");
        const json& okind_v = field(*oit, "objective", "kind");
        if (!okind_v.is_string())
            fail("objective.kind", "expected a string");
        const std::string okind = okind_v.get<std::string>();
        if (okind == "squared_l2") {
            check_keys(*oit, "objective", {"kind"});
            f.objective = ConvexObjective::Kind::SquaredL2;
        } else if (okind == "linear") {
            check_keys(*oit, "objective", {"kind", "a"});
            f.objective = ConvexObjective::Kind::Linear;
            f.objective_coeffs = get_vector(field(*oit, "objective", "a"), "objective.a");
            if (f.objective_coeffs.dim() != weighting_dim(f))
                fail("objective.a", "expected " + std::to_string(weighting_dim(f)) +
                                        " coefficients to match the weighting dimension, got " +
                                        std::to_string(f.objective_coeffs.dim()));
        } else if (okind == "max_coordinate") {
            check_keys(*oit, "objective", {"kind"});
            f.objective = ConvexObjective::Kind::MaxCoordinate;
        } else {
            fail("objective.kind", "unknown objective \"" + okind + "\"");
        }
        if (f.kind == InstanceFile::FamilyKind::Clustering &&
            f.objective != ConvexObjective::Kind::SquaredL2)
            fail("objective", "clustering instances use the squared_l2 objective");
    }

    auto opt = root.find("options");
    if (opt != root.end() && !opt->is_null()) {
        if (!opt->is_object())
            fail("options", "expected an object");
        check_keys(*opt, "options", {"unrestricted", "jobs", "budget"});
        if (auto it = opt->find("unrestricted"); it != opt->end()) {
            if (!it->is_boolean())
                fail("options.unrestricted", "expected true or false");
            f.unrestricted = it->get<bool>();
        }
        if (auto it = opt->find("jobs"); it != opt->end())
            f.jobs = static_cast<unsigned>(get_count(*it, "options.jobs", 1));
        if (auto it = opt->find("budget"); it != opt->end()) {
            if (!it->is_object())
                fail("options.budget", "expected an object");
            check_keys(*it, "options.budget", {"max_n", "max_members"});
            if (auto b = it->find("max_n"); b != it->end())
                f.budget.max_n = get_count(*b, "options.budget.max_n", 1);
            if (auto b = it->find("max_members"); b != it->end())
                f.budget.max_members = get_count(*b, "options.budget.max_members", 1);
        }
    }

    return f;
}

InstanceFile load_instance(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError(path + ": cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_instance(buf.str());
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

std::string serialize_instance(const InstanceFile& f) {
    json root;
    root["version"] = f.version;

    json fam;
    switch (f.kind) {
    case InstanceFile::FamilyKind::PowerSet:
        fam["kind"] = "powerset";
        fam["n"] = f.powerset_n;
        break;
    case InstanceFile::FamilyKind::Matroid: {
        if (!f.matroid)
            throw std::invalid_argument("matroid instance without a matroid block");
        const MatroidSpec& m = *f.matroid;
        fam["kind"] = "matroid";
        switch (m.kind) {
        case MatroidSpec::Kind::Uniform:
            fam["variant"] = "uniform";
            break;
        case MatroidSpec::Kind::Graphic:
            fam["variant"] = "graphic";
            break;
        case MatroidSpec::Kind::Linear:
            fam["variant"] = "linear";
            break;
        }
        fam["mode"] = m.mode == MatroidMode::Bases ? "bases" : "independent";
        if (m.kind == MatroidSpec::Kind::Uniform) {
            fam["rank"] = m.uniform_rank;
            fam["n"] = m.n;
        } else if (m.kind == MatroidSpec::Kind::Graphic) {
            fam["vertices"] = m.graph_vertices;
            json edges = json::array();
            for (const auto& [u, v] : m.graph_edges)
                edges.push_back(json::array({u, v}));
            fam["edges"] = std::move(edges);
        } else {
            json cols = json::array();
            for (std::size_t j = 0; j < m.columns.cols(); ++j) {
                json col = json::array();
                for (std::size_t i = 0; i < m.columns.rows(); ++i)
                    col.push_back(m.columns.at(i, j).str());
                cols.push_back(std::move(col));
            }
            fam["columns"] = std::move(cols);
        }
        break;
    }
    case InstanceFile::FamilyKind::ShapedPartition: {
        if (!f.partition)
            throw std::invalid_argument("shaped_partition instance without a partition block");
        fam["kind"] = "shaped_partition";
        fam["points"] = points_json(f.partition->points);
        fam["p"] = f.partition->p;
        fam["l"] = f.partition->lower;
        fam["u"] = f.partition->upper;
        break;
    }
    case InstanceFile::FamilyKind::Clustering:
        if (!f.clustering)
            throw std::invalid_argument("clustering instance without a clustering block");
        fam["kind"] = "clustering";
        fam["points"] = points_json(f.clustering->points);
        fam["p"] = f.clustering->p;
        fam["m"] = f.clustering->m;
        break;
    }
    root["family"] = std::move(fam);

    if (f.weighting)
        root["weighting"] = points_json(f.weighting->rows);

    json obj;
    switch (f.objective) {
    case ConvexObjective::Kind::SquaredL2:
        obj["kind"] = "squared_l2";
        break;
    case ConvexObjective::Kind::Linear:
        obj["kind"] = "linear";
        obj["a"] = vector_json(f.objective_coeffs);
        break;
    case ConvexObjective::Kind::MaxCoordinate:
        obj["kind"] = "max_coordinate";
        break;
    case ConvexObjective::Kind::Custom:
        throw std::invalid_argument("custom objectives cannot be described in a file");
    }
    root["objective"] = std::move(obj);

    json opts;
    opts["unrestricted"] = f.unrestricted;
    opts["jobs"] = f.jobs;
    opts["budget"] = json{{"max_n", f.budget.max_n}, {"max_members", f.budget.max_members}};
    root["options"] = std::move(opts);

    return root.dump(2) + "\n";
}

BuiltProblem build_problem(const InstanceFile& f) {
    BuiltProblem out;
    out.kind = f.kind;
    switch (f.kind) {
    case InstanceFile::FamilyKind::PowerSet: {
        if (!f.weighting)
            throw std::invalid_argument("powerset instance without a weighting");
        out.problem = Problem{make_powerset_family(f.powerset_n), *f.weighting,
                              make_objective(f)};
        return out;
    }
    case InstanceFile::FamilyKind::Matroid: {
        if (!f.matroid || !f.weighting)
            throw std::invalid_argument("matroid instance incomplete");
        out.problem =
            Problem{make_matroid_family(*f.matroid), *f.weighting, make_objective(f)};
        return out;
    }
    case InstanceFile::FamilyKind::ShapedPartition: {
        if (!f.partition)
            throw std::invalid_argument("shaped_partition instance incomplete");
        const auto& b = *f.partition;
        std::vector<std::size_t> l = b.lower;
        std::vector<std::size_t> u = b.upper;
        if (f.unrestricted) {
            l.assign(b.p, 0);
            u.assign(b.p, b.points.size());
        }
        ShapedPartitionInstance inst(b.points, b.p, std::move(l), std::move(u));
        out.problem = Problem{make_partition_family(inst), partition_weighting(inst),
                              make_objective(f)};
        out.partition = std::move(inst);
        return out;
    }
    case InstanceFile::FamilyKind::Clustering: {
        if (!f.clustering)
            throw std::invalid_argument("clustering instance incomplete");
        const auto& c = *f.clustering;
        std::vector<std::size_t> l(c.p, c.m);
        std::vector<std::size_t> u(c.p, c.m);
        if (f.unrestricted) {
            l.assign(c.p, 0);
            u.assign(c.p, c.points.size());
        } else if (c.points.size() != c.p * c.m) {
            throw InfeasibleError("no balanced clustering: need p * m = n points, got p = " +
                                  std::to_string(c.p) + ", m = " + std::to_string(c.m) +
                                  ", n = " + std::to_string(c.points.size()));
        }
        ShapedPartitionInstance inst(c.points, c.p, std::move(l), std::move(u));
        out.problem = Problem{make_partition_family(inst), partition_weighting(inst),
                              make_objective(f)};
        out.partition = std::move(inst);
        return out;
    }
    }
    throw std::logic_error("unhandled family kind");
}

} // namespace ccopt
