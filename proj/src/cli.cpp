#include "canform/cli.hpp"

#include <sstream>

#include <CLI11.hpp>

#include "canform/affine.hpp"
#include "canform/pairs.hpp"
#include "canform/text_format.hpp"

namespace canform::cli {

namespace {

using nlohmann::json;

json scalar_json(const Scalar& s) { return s.to_string(); }

json matrix_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

json polynomial_json(const Polynomial& p) {
    json out = json::array();
    for (const Scalar& c : p.coefficients()) out.push_back(c.to_string());
    return out;
}

json partition_json(const Partition& p) { return p.parts(); }

json qform_json(const QForm& q) {
    return {{"a11", scalar_json(q.a11())}, {"b11", scalar_json(q.b11())}, {"b21", scalar_json(q.b21())}};
}

json pair_json(const Matrix& a, const Matrix& b) { return json::array({matrix_json(a), matrix_json(b)}); }

std::string indent(const std::string& block, const std::string& pad) {
    std::istringstream in(block);
    std::string line, out;
    while (std::getline(in, line)) out += pad + line + "\n";
    return out;
}

/// Text rendering, one line per key. Matrices (rectangular arrays of string
/// arrays) print as aligned blocks; other arrays print inline.
bool is_matrix(const json& v) {
    if (!v.is_array() || v.empty() || !v.front().is_array() || v.front().empty()) return false;
    for (const json& row : v) {
        if (!row.is_array() || row.size() != v.front().size()) return false;
        for (const json& e : row)
            if (!e.is_string()) return false;
    }
    return true;
}

std::string inline_text(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array()) {
        std::string out = "[";
        for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + inline_text(v[i]);
        return out + "]";
    }
    if (v.is_object()) {
        std::string out = "{";
        bool first = true;
        for (const auto& [k, e] : v.items()) {
            out += (first ? "" : ", ") + k + ": " + inline_text(e);
            first = false;
        }
        return out + "}";
    }
    return v.dump();
}

std::string matrix_text(const json& m) {
    std::size_t width = 0;
    for (const json& row : m)
        for (const json& e : row) width = std::max(width, e.get<std::string>().size());
    std::string out;
    for (const json& row : m) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            std::string e = row[c].get<std::string>();
            out += (c ? " " : "") + std::string(width - e.size(), ' ') + e;
        }
        out += "\n";
    }
    return out;
}

std::string object_text(const json& obj) {
    std::string out;
    for (const auto& [key, v] : obj.items()) {
        if (key == "invariant_factors" || key == "qs") {
            // Polynomial lists, one coefficient list per line.
            out += key + ":\n";
            for (const json& p : v) out += "  " + inline_text(p) + "\n";
        } else if (is_matrix(v)) {
            out += key + ":\n" + indent(matrix_text(v), "  ");
        } else if (v.is_array() && !v.empty() && (is_matrix(v.front()) || v.front().is_object())) {
            out += key + ":\n";
            for (std::size_t i = 0; i < v.size(); ++i) {
                const json& e = v[i];
                std::string body = is_matrix(e) ? matrix_text(e) : e.is_object() ? object_text(e) : inline_text(e) + "\n";
                out += "  [" + std::to_string(i) + "]\n" + indent(body, "    ");
            }
        } else if (v.is_object()) {
            out += key + ":\n" + indent(object_text(v), "  ");
        } else {
            out += key + ": " + inline_text(v) + "\n";
        }
    }
    return out;
}

Matrix load_matrix(const std::string& path, const std::optional<Field>& field) {
    return read_matrix_file(path, field);
}

std::pair<Matrix, Matrix> load_pair(const std::string& path, const std::optional<Field>& field) {
    auto ms = read_matrix_file_all(path, field);
    if (ms.size() != 2)
        throw Error(ErrorKind::ParseError, path + ": a pair file holds exactly two matrices, found " + std::to_string(ms.size()));
    return {ms[0], ms[1]};
}

Report ok(json payload) { return {Status::ok, std::move(payload)}; }

Report run_rnf(const Invocation& inv) {
    Matrix a = load_matrix(inv.inputs.at(0), inv.field);
    RnfTransform rt = rnf_transform(a);
    json factors = json::array();
    for (const Polynomial& f : rt.form.factors()) factors.push_back(polynomial_json(f));
    json payload = {{"field", a.field().to_string()},
                    {"invariant_factors", factors},
                    {"partition", partition_json(partition_of(rt.form))},
                    {"normal_form", matrix_json(rt.normal)},
                    {"transform", matrix_json(rt.transform)}};
    Report report = ok(payload);
    if (inv.verify) {
        bool good = !rt.transform.determinant().is_zero() && inverse(rt.transform) * a * rt.transform == rt.normal;
        report.payload["verified"] = good;
        if (!good) report.status = Status::mismatch;
    }
    return report;
}

Report run_affine(const Invocation& inv) {
    Matrix a = load_matrix(inv.inputs.at(0), inv.field);
    AffineRepresentative rep = to_affine(invariant_factors(a));
    json qs = json::array();
    for (const Polynomial& q : rep.qs()) qs.push_back(polynomial_json(q));
    return ok({{"field", a.field().to_string()},
               {"partition", partition_json(rep.partition())},
               {"qs", qs},
               {"affine_representative", matrix_json(affine_point(rep))}});
}

Report run_normal_form(const Invocation& inv) {
    Matrix a = load_matrix(inv.inputs.at(0), inv.field);
    RationalNormalForm form = invariant_factors(a);
    bool affine = inv.family == Family::affine;
    Matrix m = affine ? affine_point(to_affine(form)) : assemble_rnf_matrix(form);
    return ok({{"field", a.field().to_string()},
               {"family", affine ? "affine" : "rational"},
               {"partition", partition_json(partition_of(form))},
               {"matrix", matrix_json(m)}});
}

Report run_verify(const Invocation& inv) {
    Matrix a = load_matrix(inv.inputs.at(0), inv.field);
    Matrix t = load_matrix(inv.inputs.at(1), inv.field);
    if (t.rows() != a.rows() || t.cols() != a.cols())
        throw Error(ErrorKind::DimensionMismatch, "transform must have the shape of the matrix");
    Matrix r = rnf_transform(a).normal;
    bool singular = t.determinant().is_zero();
    // T^{-1} A T = R  <=>  A T = T R for invertible T.
    bool good = !singular && a * t == t * r;
    Report report = ok({{"field", a.field().to_string()},
                        {"normal_form", matrix_json(r)},
                        {"singular_transform", singular},
                        {"verified", good}});
    if (!good) report.status = Status::mismatch;
    return report;
}

InvariantTriple parse_triple(const Invocation& inv) {
    Field f = inv.field.value_or(Field::rationals());
    if (inv.inputs.size() != 3) throw Error(ErrorKind::UsageError, "pairs fiber takes three invariants");
    return {Scalar::parse(f, inv.inputs[0]), Scalar::parse(f, inv.inputs[1]), Scalar::parse(f, inv.inputs[2])};
}

json triple_json(const InvariantTriple& y) {
    return {{"x1", scalar_json(y.x1)}, {"x2", scalar_json(y.x2)}, {"x3", scalar_json(y.x3)}};
}

Report run_pairs(const Invocation& inv) {
    switch (inv.command) {
    case Command::pairs_invariants: {
        auto [a, b] = load_pair(inv.inputs.at(0), inv.field);
        Sl2Pair pair(a, b);
        InvariantTriple y = invariants(pair);
        Scalar g = g_value(y);
        return ok({{"field", a.field().to_string()},
                   {"invariants", triple_json(y)},
                   {"g", scalar_json(g)},
                   {"in_y", !g.is_zero()}});
    }
    case Command::pairs_fiber: {
        InvariantTriple y = parse_triple(inv);
        json points = json::array();
        auto fiber = q_points(y);
        for (const QForm& q : fiber) points.push_back(qform_json(q));
        return ok({{"field", y.x1.field().to_string()},
                   {"invariants", triple_json(y)},
                   {"count", fiber.size()},
                   {"points", points}});
    }
    case Command::pairs_reduce: {
        auto [a, b] = load_pair(inv.inputs.at(0), inv.field);
        Reduction r = reduce_to_q(Sl2Pair(a, b));
        Sl2Pair q = r.q.realize();
        return ok({{"field", a.field().to_string()},
                   {"g", matrix_json(r.g)},
                   {"q", qform_json(r.q)},
                   {"pair", pair_json(q.a(), q.b())}});
    }
    case Command::pairs_hom: {
        auto [a1, b1] = load_pair(inv.inputs.at(0), inv.field);
        auto [a2, b2] = load_pair(inv.inputs.at(1), inv.field);
        auto basis = hom_space(PairPoint(a1, b1), PairPoint(a2, b2));
        json mats = json::array();
        for (const Matrix& f : basis) mats.push_back(matrix_json(f));
        return ok({{"field", a1.field().to_string()}, {"dimension", basis.size()}, {"basis", mats}});
    }
    case Command::pairs_split: {
        auto [a, b] = load_pair(inv.inputs.at(0), inv.field);
        PairPoint m(a, b);
        SplitOff out = split_off_simple(m);
        PairPoint s = simple_pair(m.field(), m.size());
        return ok({{"field", a.field().to_string()},
                   {"s", pair_json(s.m1(), s.m2())},
                   {"t", pair_json(out.t.m1(), out.t.m2())},
                   {"h", matrix_json(out.h)}});
    }
    default:
        throw Error(ErrorKind::UsageError, "not a pairs command");
    }
}

bool usage_level(ErrorKind kind) {
    return kind == ErrorKind::UsageError || kind == ErrorKind::ParseError || kind == ErrorKind::FieldMismatch;
}

/// Accepts `--field GF 7` by folding it into the single token `--field=GF 7`.
std::vector<std::string> fold_field_tokens(const std::vector<std::string>& args) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--field" && i + 2 < args.size() && args[i + 1] == "GF") {
            out.push_back("--field=GF " + args[i + 2]);
            i += 2;
        } else {
            out.push_back(args[i]);
        }
    }
    return out;
}

Field field_from_option(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::string> tokens;
    for (std::string t; in >> t;) tokens.push_back(t);
    return parse_field_spec(tokens);
}

} // namespace

std::string status_name(Status status) {
    switch (status) {
    case Status::ok:
        return "ok";
    case Status::mismatch:
        return "mismatch";
    case Status::error:
        return "error";
    }
    return "error";
}

std::optional<Invocation> parse_arguments(const std::vector<std::string>& raw, std::ostream& out) {
    Invocation inv;
    std::string field_text, format = "text", family = "rational";
    std::string file, second;
    std::vector<std::string> triple;

    CLI::App app{"Exact rational normal forms, affine representatives and sl2 pair invariants", "canform"};
    app.require_subcommand(1);
    auto common = [&](CLI::App* sub) {
        sub->add_option("--field", field_text, "Q, or GF <p>");
        sub->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    };
    auto with_file = [&](CLI::App* sub, const char* name) {
        sub->add_option(name, file)->required();
        common(sub);
        return sub;
    };

    auto* rnf = with_file(app.add_subcommand("rnf", "Invariant factors, partition, R and T"), "matrix-file");
    rnf->add_flag("--verify", inv.verify, "Recheck T^-1 A T = R");
    auto* affine = with_file(app.add_subcommand("affine", "Partition, Q tuple and affine representative"), "matrix-file");
    auto* nf = with_file(app.add_subcommand("normal-form", "Normal form matrix of the chosen family"), "matrix-file");
    nf->add_option("--family", family, "rational or affine")->check(CLI::IsMember({"rational", "affine"}));
    auto* verify = with_file(app.add_subcommand("verify", "Check a transform T against the matrix"), "matrix-file");
    verify->add_option("transform-file", second)->required();
    auto* self = app.add_subcommand("selftest", "Golden checks");
    common(self);

    auto* pairs = app.add_subcommand("pairs", "Pairs of 2x2 trace-zero matrices");
    pairs->require_subcommand(1);
    auto* p_inv = with_file(pairs->add_subcommand("invariants", "(det A, tr AB, det B) and g"), "pair-file");
    auto* p_fiber = pairs->add_subcommand("fiber", "Every QForm point over (x1, x2, x3)");
    p_fiber->add_option("invariants", triple)->expected(3)->required();
    common(p_fiber);
    auto* p_reduce = with_file(pairs->add_subcommand("reduce", "Conjugate a pair into QForm"), "pair-file");
    auto* p_hom = with_file(pairs->add_subcommand("hom", "Hom space between two pairs"), "pair-file");
    p_hom->add_option("target-file", second)->required();
    auto* p_split = with_file(pairs->add_subcommand("split", "Split the simple s off a point of W"), "pair-file");

    std::vector<std::string> args = fold_field_tokens(raw);
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return std::nullopt;
    } catch (const CLI::ParseError& e) {
        throw Error(ErrorKind::UsageError, e.what());
    }

    if (rnf->parsed()) inv.command = Command::rnf;
    else if (affine->parsed()) inv.command = Command::affine;
    else if (nf->parsed()) inv.command = Command::normal_form;
    else if (verify->parsed()) inv.command = Command::verify;
    else if (self->parsed()) inv.command = Command::selftest;
    else if (p_inv->parsed()) inv.command = Command::pairs_invariants;
    else if (p_fiber->parsed()) inv.command = Command::pairs_fiber;
    else if (p_reduce->parsed()) inv.command = Command::pairs_reduce;
    else if (p_hom->parsed()) inv.command = Command::pairs_hom;
    else if (p_split->parsed()) inv.command = Command::pairs_split;

    if (inv.command == Command::pairs_fiber) inv.inputs = triple;
    else if (!file.empty()) inv.inputs.push_back(file);
    if (!second.empty()) inv.inputs.push_back(second);
    if (!field_text.empty()) {
        try {
            inv.field = field_from_option(field_text);
        } catch (const Error& e) {
            throw Error(ErrorKind::UsageError, std::string("--field: ") + e.what());
        }
    }
    inv.format = format == "json" ? Format::json : Format::text;
    inv.family = family == "affine" ? Family::affine : Family::rational;
    return inv;
}

Outcome run(const Invocation& inv) {
    Report report;
    try {
        switch (inv.command) {
        case Command::rnf:
            report = run_rnf(inv);
            break;
        case Command::affine:
            report = run_affine(inv);
            break;
        case Command::normal_form:
            report = run_normal_form(inv);
            break;
        case Command::verify:
            report = run_verify(inv);
            break;
        case Command::selftest:
            report = selftest();
            break;
        default:
            report = run_pairs(inv);
        }
    } catch (const Error& e) {
        report = {Status::error, {{"error", e.name()}, {"message", e.what()}}};
        return {usage_level(e.kind()) ? exit_usage : exit_domain, report};
    }
    return {report.status == Status::ok ? exit_ok : exit_mismatch, report};
}

std::string render(const Report& report, Format format) {
    json doc = report.payload;
    doc["status"] = status_name(report.status);
    if (format == Format::json) return doc.dump(2) + "\n";
    return object_text(doc);
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::optional<Invocation> inv;
    try {
        inv = parse_arguments(args, out);
    } catch (const Error& e) {
        err << e.what() << "\n";
        return exit_usage;
    }
    if (!inv) return exit_ok;
    Outcome outcome = run(*inv);
    if (outcome.report.status == Status::error)
        err << outcome.report.payload["message"].get<std::string>() << "\n";
    out << render(outcome.report, inv->format);
    return outcome.exit_code;
}

} // namespace canform::cli
