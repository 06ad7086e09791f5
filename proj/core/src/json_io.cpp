#include "hyperlip/json_io.hpp"

#include <fstream>
#include <sstream>

#include "hyperlip/errors.hpp"

namespace hyperlip::io {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

const Json& field(const Json& j, const char* key) {
    if (!j.is_object()) throw InputError(std::string("expected a JSON object with field '") + key + "'");
    const auto it = j.find(key);
    if (it == j.end()) throw InputError(std::string("missing field '") + key + "'");
    return *it;
}

double number(const Json& j, const char* what) {
    if (!j.is_number()) throw InputError(std::string(what) + ": expected a number");
    return j.get<double>();
}

std::string sign_string(Sign s) { return s == Sign::Plus ? "+" : "-"; }

Sign sign_from(const Json& j) {
    if (j == "+") return Sign::Plus;
    if (j == "-") return Sign::Minus;
    throw InputError("expected \"+\" or \"-\"");
}

}  // namespace

Json to_json(const Point& p) { return Json(p.vec()); }

Point point_from_json(const Json& j) {
    if (!j.is_array()) throw InputError("point: expected an array of numbers");
    std::vector<double> c;
    c.reserve(j.size());
    for (const auto& v : j) c.push_back(number(v, "point coordinate"));
    return Point(std::move(c));
}

Json to_json(const std::vector<Point>& pts) {
    Json out = Json::array();
    for (const auto& p : pts) out.push_back(to_json(p));
    return out;
}

std::vector<Point> points_from_json(const Json& j) {
    if (!j.is_array()) throw InputError("expected an array of points");
    std::vector<Point> out;
    out.reserve(j.size());
    for (const auto& p : j) out.push_back(point_from_json(p));
    return out;
}

Json to_json(const ExtendedReal& v) {
    switch (v.kind()) {
        case ExtendedReal::Kind::NegInf: return "-inf";
        case ExtendedReal::Kind::PosInf: return "+inf";
        case ExtendedReal::Kind::Finite: break;
    }
    return v.value();
}

ExtendedReal extended_from_json(const Json& j) {
    if (j == "-inf") return ExtendedReal::neg_inf();
    if (j == "+inf") return ExtendedReal::pos_inf();
    return ExtendedReal(number(j, "extended real"));
}

Json to_json(const LipExpr& f) {
    return std::visit(
        overloaded{
            [](const lip::Const& c) { return Json{{"type", "const"}, {"value", c.value}}; },
            [](const lip::DistCone& c) {
                return Json{{"type", "distcone"},
                            {"center", to_json(c.center)},
                            {"offset", c.offset},
                            {"scale", c.scale},
                            {"orientation", sign_string(c.orientation)}};
            },
            [](const lip::Min& m) {
                Json ch = Json::array();
                for (const auto& c : m.children) ch.push_back(to_json(c));
                return Json{{"type", "min"}, {"children", ch}};
            },
            [](const lip::Max& m) {
                Json ch = Json::array();
                for (const auto& c : m.children) ch.push_back(to_json(c));
                return Json{{"type", "max"}, {"children", ch}};
            },
            [](const lip::Blend& b) {
                return Json{{"type", "blend"}, {"inner", to_json(b.inner)}, {"factor", b.factor}, {"anchor", b.anchor}};
            },
            [](const lip::McShane& m) {
                Json samples = Json::array();
                for (const auto& s : m.samples) samples.push_back(Json{{"point", to_json(s.point)}, {"value", s.value}});
                return Json{{"type", "mcshane"},
                            {"mode", m.mode == McShaneMode::Inf ? "inf" : "sup"},
                            {"scale", m.scale},
                            {"samples", samples}};
            },
            [](const lip::Infinite& i) { return Json{{"type", "inf"}, {"sign", sign_string(i.sign)}}; },
        },
        f.node().data);
}

LipExpr lipexpr_from_json(const Json& j) {
    if (j == "-inf") return LipExpr::infinite(Sign::Minus);
    if (j == "+inf") return LipExpr::infinite(Sign::Plus);
    const Json& type = field(j, "type");
    if (type == "const") return LipExpr::constant(number(field(j, "value"), "const.value"));
    if (type == "distcone") {
        const Sign orientation = j.contains("orientation") ? sign_from(j["orientation"]) : Sign::Plus;
        const double scale = j.contains("scale") ? number(j["scale"], "distcone.scale") : 1.0;
        return LipExpr::dist_cone(point_from_json(field(j, "center")), number(field(j, "offset"), "distcone.offset"),
                                  scale, orientation);
    }
    if (type == "min" || type == "max") {
        const Json& ch = field(j, "children");
        if (!ch.is_array()) throw InputError("children: expected an array");
        std::vector<LipExpr> children;
        for (const auto& c : ch) children.push_back(lipexpr_from_json(c));
        return type == "min" ? LipExpr::min(std::move(children)) : LipExpr::max(std::move(children));
    }
    if (type == "blend") {
        return LipExpr::blend(lipexpr_from_json(field(j, "inner")), number(field(j, "factor"), "blend.factor"),
                              number(field(j, "anchor"), "blend.anchor"));
    }
    if (type == "mcshane") {
        const Json& mode = field(j, "mode");
        if (mode != "inf" && mode != "sup") throw InputError("mcshane.mode must be \"inf\" or \"sup\"");
        const Json& ss = field(j, "samples");
        if (!ss.is_array()) throw InputError("mcshane.samples: expected an array");
        std::vector<LipSample> samples;
        for (const auto& s : ss) {
            samples.push_back({point_from_json(field(s, "point")), number(field(s, "value"), "sample.value")});
        }
        return LipExpr::mcshane(std::move(samples), number(field(j, "scale"), "mcshane.scale"),
                                mode == "inf" ? McShaneMode::Inf : McShaneMode::Sup);
    }
    if (type == "inf") return LipExpr::infinite(sign_from(field(j, "sign")));
    throw InputError("unknown LipExpr type " + type.dump());
}

Json to_json(const BoxLipschitzSet& q) {
    Json lower = Json::array(), upper = Json::array();
    for (std::size_t i = 0; i < q.dim(); ++i) {
        lower.push_back(q.lower(i).is_infinite() ? Json("-inf") : to_json(q.lower(i)));
        upper.push_back(q.upper(i).is_infinite() ? Json("+inf") : to_json(q.upper(i)));
    }
    return Json{{"n", q.dim()}, {"lower", lower}, {"upper", upper}};
}

BoxLipschitzSet boxset_from_json(const Json& j) {
    const Json& n_json = field(j, "n");
    if (!n_json.is_number_unsigned()) throw InputError("n: expected a non-negative integer");
    const auto n = n_json.get<std::size_t>();
    const Json& lo = field(j, "lower");
    const Json& hi = field(j, "upper");
    if (!lo.is_array() || !hi.is_array() || lo.size() != n || hi.size() != n) {
        throw InputError("lower/upper must be arrays of length n");
    }
    std::vector<LipExpr> lower, upper;
    for (std::size_t i = 0; i < n; ++i) {
        lower.push_back(lipexpr_from_json(lo[i]));
        upper.push_back(lipexpr_from_json(hi[i]));
    }
    return BoxLipschitzSet(std::move(lower), std::move(upper));
}

Json matrix_to_json(const DistanceMatrix& d) { return Json(d); }

DistanceMatrix matrix_from_json(const Json& j) {
    if (!j.is_array()) throw InputError("matrix: expected an array of rows");
    DistanceMatrix d;
    for (const auto& row : j) {
        if (!row.is_array()) throw InputError("matrix: expected an array of rows");
        std::vector<double> r;
        for (const auto& v : row) r.push_back(number(v, "matrix entry"));
        d.push_back(std::move(r));
    }
    return d;
}

Json to_json(const ConeDescriptor& c) {
    return Json{{"apex", to_json(c.apex)}, {"axis", c.axis}, {"sign", sign_string(c.sign)}};
}

ConeDescriptor cone_from_json(const Json& j) {
    const Json& axis = field(j, "axis");
    if (!axis.is_number_unsigned()) throw InputError("cone.axis: expected a non-negative integer");
    return {point_from_json(field(j, "apex")), axis.get<std::size_t>(), sign_from(field(j, "sign"))};
}

Json to_json(const Box& b) { return Json{{"lo", to_json(b.lo)}, {"hi", to_json(b.hi)}}; }

Box box_from_json(const Json& j) {
    Box b{point_from_json(field(j, "lo")), point_from_json(field(j, "hi"))};
    if (b.lo.size() != b.hi.size()) throw DimensionMismatch(b.lo.size(), b.hi.size());
    for (std::size_t i = 0; i < b.dim(); ++i) {
        if (b.lo[i] > b.hi[i]) throw InputError("box: lo > hi");
    }
    return b;
}

Json parse(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
}

Json read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path);
    out << content;
}

}  // namespace hyperlip::io
