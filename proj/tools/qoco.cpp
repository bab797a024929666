// Batch front door for the library: verify claims, search and enumerate,
// classify pair orbits.  Exit codes: 0 verified/success, 1 falsified,
// 2 usage error, 3 resource guard.
#include <CLI11.hpp>
#include <qoco/qoco.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace {

constexpr const char* kVersion = "0.1.0";

using KV = std::vector<std::pair<std::string, std::string>>;

// --- plumbing ----------------------------------------------------------------

struct Output {
    std::ofstream file;
    std::ostream* os = &std::cout;

    void open(const std::string& path) {
        if (path.empty()) return;
        file.open(path);
        if (!file) throw qoco::usage_error("cannot open output file: " + path);
        os = &file;
    }
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        return std::string(std::istreambuf_iterator<char>(std::cin),
                           std::istreambuf_iterator<char>());
    }
    std::ifstream in(path);
    if (!in) throw qoco::usage_error("cannot read input file: " + path);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty() || tok.find_first_not_of("0123456789-") != std::string::npos ||
            tok.find('-', 1) != std::string::npos)
            throw qoco::usage_error(what + " must be a comma-separated list of integers, got '" +
                                    text + "'");
        out.push_back(std::stoi(tok));
    }
    if (out.empty()) throw qoco::usage_error(what + " must not be empty");
    return out;
}

template <typename T>
std::string join(const std::vector<T>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    return s;
}

const char* yn(bool b) { return b ? "yes" : "no"; }

// Every run opens with one comment line recording its configuration; all
// computation is exact, so the seed note is fixed.
void emit_header(std::ostream& os, const std::string& command, KV kv, const std::string& format,
                 int workers) {
    kv.emplace_back("format", format);
    kv.emplace_back("workers", std::to_string(workers));
    kv.emplace_back("version", kVersion);
    kv.emplace_back("seed", "none");
    os << qoco::config_line(command, kv) << "\n";
}

void require_format(const std::string& format, bool csv_ok) {
    if (format == "csv" && !csv_ok)
        throw qoco::usage_error("csv output is only defined for enumerate and classify summaries");
}

// Coset representative by label: trivial, gamma, lambda, beta, or fz:<bits>.
qoco::Cocycle representative(const qoco::GroupPtr& g, const qoco::GroupSpec& spec,
                             const std::string& label) {
    std::string name = label, z_text;
    if (auto colon = label.find(':'); colon != std::string::npos) {
        name = label.substr(0, colon);
        z_text = label.substr(colon + 1);
    }
    if (name == "trivial") return qoco::trivial_cocycle(g);
    if (name == "gamma") {
        if (spec.kind != qoco::GroupSpec::Kind::abelian || spec.s.size() != 1)
            throw qoco::usage_error("the gamma representative needs a cyclic group a:m");
        return qoco::gamma_cocycle(spec.s[0]);
    }
    if (name == "fz") {
        if (spec.kind != qoco::GroupSpec::Kind::abelian)
            throw qoco::usage_error("the fz representative needs an abelian group a:...");
        if (z_text.empty()) throw qoco::usage_error("--z is required with --rep fz");
        return qoco::f_z_cocycle(spec.s, parse_int_list(z_text, "--z"));
    }
    if (name == "lambda" || name == "beta") {
        if (spec.kind != qoco::GroupSpec::Kind::dihedral)
            throw qoco::usage_error("the " + name + " representative needs a dihedral group d:n");
        return name == "lambda" ? qoco::dihedral_lambda(spec.n) : qoco::dihedral_beta(spec.n);
    }
    throw qoco::usage_error("unknown representative: " + label);
}

// --- verify ------------------------------------------------------------------

void print_certificate(const qoco::DesignCertificate& cert, const std::string& format,
                       std::ostream& os) {
    if (format == "jsonl") {
        os << qoco::certificate_json(cert).dump() << "\n";
        return;
    }
    os << "kind=" << qoco::design_kind_str(cert.kind) << "\n";
    os << "group=" << cert.ambient->label() << " order=" << cert.ambient->order() << "\n";
    os << "v=" << cert.v;
    if (cert.kind == qoco::DesignKind::relative_difference_set ||
        cert.kind == qoco::DesignKind::relative_quasi_difference_set)
        os << " m=" << cert.m;
    os << " k=" << cert.k << " lambda=" << cert.lambda;
    if (cert.kind == qoco::DesignKind::almost_difference_set) os << " extra=" << cert.extra;
    os << "\n";
    os << "subset size=" << cert.subset.size() << ": " << join(cert.subset) << "\n";
    os << "census:";
    for (const auto& [value, times] : cert.census) os << " " << value << "x" << times;
    os << "\n";
    if (cert.kind == qoco::DesignKind::relative_quasi_difference_set) {
        os << "extremal: " << yn(cert.extremal) << "\n";
        if (!cert.s_set.empty()) os << "s_set=" << join(cert.s_set) << "\n";
    }
    if (!cert.reason.empty()) os << "reason: " << cert.reason << "\n";
    os << "design: " << yn(cert.verified) << "\n";
}

int run_verify_ngp(const std::string& text1, const std::string& text2, int len, bool design,
                   const std::string& format, std::ostream& os) {
    qoco::NGPair p{qoco::parse_sequence(text1, len), qoco::parse_sequence(text2, len)};
    qoco::check_pair(p);
    int n = int(p.phi1.size());
    std::vector<long long> r1, r2;
    for (int w = 1; w < n; ++w) {
        r1.push_back(qoco::nega_autocorrelation(p.phi1, w));
        r2.push_back(qoco::nega_autocorrelation(p.phi2, w));
    }
    bool ngp = qoco::is_ngp(p);
    std::optional<qoco::DesignCertificate> cert;
    if (design) cert = qoco::ngp_to_rds(p);
    bool ok = ngp && (!cert || cert->verified);
    if (format == "jsonl") {
        qoco::ojson j = qoco::pair_json(p);
        j["r1"] = r1;
        j["r2"] = r2;
        j["verified"] = ngp;
        os << j.dump() << "\n";
        if (cert) print_certificate(*cert, format, os);
    } else {
        os << "length=" << n << "\n";
        os << "phi1=" << qoco::signs_to_string(p.phi1) << "\n";
        os << "phi2=" << qoco::signs_to_string(p.phi2) << "\n";
        for (std::size_t i = 0; i < r1.size(); ++i)
            os << "w=" << i + 1 << " r1=" << r1[i] << " r2=" << r2[i] << " sum=" << r1[i] + r2[i]
               << "\n";
        os << "ngp: " << yn(ngp) << "\n";
        if (cert) print_certificate(*cert, format, os);
        os << "verdict: " << (ok ? "verified" : "falsified") << "\n";
    }
    return ok ? 0 : 1;
}

// Accepts either a matrix dump ("group" + "rows") or a search-hit record
// ("group" + "representative" + "subset").  A dump claims the cocycle
// identity; a hit additionally claims quasi-orthogonality and that its
// recorded census matches.
int run_verify_cocycle(const std::string& path, bool design, const std::string& format,
                       std::ostream& os) {
    qoco::ojson j = qoco::ojson::parse(read_input(path));
    bool hit_form = !j.contains("rows");
    qoco::Cocycle c = [&]() -> qoco::Cocycle {
        if (!hit_form) return qoco::cocycle_from_json(j);
        qoco::GroupSpec spec = qoco::GroupSpec::parse(j.at("group").get<std::string>());
        qoco::GroupPtr g = qoco::build_group(spec);
        qoco::Cocycle rep = representative(g, spec, j.at("representative").get<std::string>());
        auto subset = j.at("subset").get<std::vector<qoco::Elem>>();
        return qoco::hadamard(rep, qoco::coboundary_product(g, subset));
    }();
    bool cocycle_ok = qoco::is_cocycle(c);
    auto row_sums = c.m.row_sums();
    long long re = 0;
    for (int g = 1; g < c.m.n(); ++g) re += std::abs(row_sums[std::size_t(g)]);
    int n = c.group->order();
    bool qo_defined = cocycle_ok && n % 4 == 2 && n >= 6;
    bool cob = cocycle_ok && qoco::decompose_coboundary(c).has_value();
    bool orth = cocycle_ok && qoco::is_orthogonal(c);
    bool qo = qo_defined && qoco::is_quasi_orthogonal(c);
    bool normal = cocycle_ok && qoco::is_normal(c);
    bool verified = cocycle_ok;
    if (hit_form) {
        if (j.contains("re")) verified = verified && j.at("re").get<long long>() == re;
        if (j.contains("row_sums"))
            verified = verified && j.at("row_sums").get<std::vector<int>>() == row_sums;
        verified = verified && qo_defined && qo;
    }
    std::optional<qoco::DesignCertificate> cert;
    if (design && cocycle_ok) {
        cert = qoco::cocycle_rqds_certificate(c);
        verified = verified && cert->verified;
    } else if (design) {
        verified = false;
    }
    if (format == "jsonl") {
        qoco::ojson r;
        r["group"] = c.group->label();
        r["cocycle"] = cocycle_ok;
        r["row_sums"] = row_sums;
        r["re"] = re;
        if (cocycle_ok) {
            r["coboundary"] = cob;
            r["orthogonal"] = orth;
            r["quasiorthogonal"] = qo_defined ? qoco::ojson(qo) : qoco::ojson("not applicable");
            r["normal"] = normal;
        }
        r["verified"] = verified;
        os << r.dump() << "\n";
        if (cert) print_certificate(*cert, format, os);
    } else {
        os << "group=" << c.group->label() << " order=" << n << "\n";
        os << "cocycle: " << yn(cocycle_ok) << "\n";
        os << "row_sums=" << join(row_sums) << "\n";
        os << "re=" << re << "\n";
        if (cocycle_ok) {
            os << "coboundary: " << yn(cob) << "\n";
            os << "orthogonal: " << yn(orth) << "\n";
            os << "quasiorthogonal: " << (qo_defined ? yn(qo) : "not applicable") << "\n";
            os << "normal: " << yn(normal) << "\n";
        }
        if (cert) print_certificate(*cert, format, os);
        os << "verdict: " << (verified ? "verified" : "falsified") << "\n";
    }
    return verified ? 0 : 1;
}

int run_verify_goba(const std::string& text, const std::string& s_text, const std::string& z_text,
                    bool design, const std::string& format, std::ostream& os) {
    qoco::SignVector v = qoco::parse_sequence(text);
    std::vector<int> s =
        s_text.empty() ? std::vector<int>{int(v.size())} : parse_int_list(s_text, "--s");
    std::vector<int> z = parse_int_list(z_text, "--z");
    qoco::BinaryArray a = qoco::make_array(s, std::move(v));
    qoco::ArrayClass cls = qoco::classify(a, z);
    bool goba = cls.goba == qoco::Tri::yes;
    std::optional<qoco::DesignCertificate> cert;
    if (design) cert = qoco::goba_rqds_certificate(a, z);
    bool ok = goba && (!cert || cert->verified);
    if (format == "jsonl") {
        qoco::ojson j = qoco::array_json(a, &z);
        j["peak"] = cls.peak;
        j["pba"] = qoco::tri_str(cls.pba);
        j["oba"] = qoco::tri_str(cls.oba);
        j["gpba"] = qoco::tri_str(cls.gpba);
        j["goba"] = qoco::tri_str(cls.goba);
        j["gobs"] = qoco::tri_str(cls.gobs);
        j["verified"] = goba;
        os << j.dump() << "\n";
        if (cert) print_certificate(*cert, format, os);
    } else {
        os << "s=" << join(a.s) << " z=" << join(z) << " energy=" << a.energy() << "\n";
        os << "values=" << qoco::signs_to_string(a.values) << "\n";
        os << "peak=" << cls.peak << "\n";
        os << "pba: " << qoco::tri_str(cls.pba) << "\n";
        os << "oba: " << qoco::tri_str(cls.oba) << "\n";
        os << "gpba: " << qoco::tri_str(cls.gpba) << "\n";
        os << "goba: " << qoco::tri_str(cls.goba) << "\n";
        os << "gobs: " << qoco::tri_str(cls.gobs) << "\n";
        if (cert) print_certificate(*cert, format, os);
        os << "verdict: " << (ok ? "verified" : "falsified") << "\n";
    }
    return ok ? 0 : 1;
}

int run_verify_design(const std::string& path, const std::string& format, std::ostream& os) {
    qoco::ojson j = qoco::ojson::parse(read_input(path));
    qoco::DesignCertificate cert = qoco::verify_design(qoco::design_from_json(j));
    print_certificate(cert, format, os);
    if (format != "jsonl")
        os << "verdict: " << (cert.verified ? "verified" : "falsified") << "\n";
    return cert.verified ? 0 : 1;
}

// --- enumerate / classify ------------------------------------------------------

int run_enumerate(int k, const std::string& source, const std::string& format, std::ostream& os) {
    qoco::NgpSet set = qoco::enumerate_ngps(k, source);
    const char* key = source == "gobs" ? "nhat" : "n";
    if (format == "csv") {
        os << qoco::csv_table({"k", key}, {{k, set.count}});
    } else if (format == "jsonl") {
        qoco::ojson j;
        j["k"] = k;
        j["length"] = set.length;
        j["source"] = source;
        j[key] = set.count;
        os << j.dump() << "\n";
    } else {
        os << key << "=" << set.count << "\n";
    }
    return 0;
}

int run_classify(int k, const std::string& source, const std::string& ops,
                 const std::string& format, std::ostream& os) {
    qoco::NgpSet set = qoco::enumerate_ngps(k, source, true);
    qoco::NgpOrbits orbits = qoco::classify_ngps(set, ops);
    if (format == "csv") {
        os << qoco::csv_table({"k", "classes"}, {{k, orbits.orbit_count}});
        return 0;
    }
    for (std::size_t i = 0; i < orbits.representatives.size(); ++i) {
        qoco::NGPair rep = qoco::unpack_pair(orbits.representatives[i], set.length);
        if (format == "jsonl") {
            qoco::ojson j = qoco::pair_json(rep);
            j["orbit_size"] = orbits.sizes[i];
            os << j.dump() << "\n";
        } else {
            os << "orbit size=" << orbits.sizes[i]
               << " phi1=" << qoco::signs_to_string(rep.phi1)
               << " phi2=" << qoco::signs_to_string(rep.phi2) << "\n";
        }
    }
    if (format == "jsonl") {
        qoco::ojson j;
        j["k"] = k;
        j["source"] = source;
        j["ops"] = ops;
        j["classes"] = orbits.orbit_count;
        os << j.dump() << "\n";
    } else {
        os << "classes=" << orbits.orbit_count << "\n";
    }
    return 0;
}

// --- search --------------------------------------------------------------------

void emit_search_summary(const qoco::SearchResult& res, std::size_t arrays,
                         const std::string& format, std::ostream& os) {
    if (format == "jsonl") {
        qoco::ojson j;
        j["hits"] = res.hits.size();
        if (arrays) j["arrays"] = arrays;
        j["target_re"] = res.target_re;
        j["visited"] = res.subsets_visited;
        j["tested"] = res.subsets_tested;
        j["partitions"] = res.partitions;
        j["resumed_from"] = res.resumed_from;
        os << j.dump() << "\n";
    } else {
        os << "hits=" << res.hits.size();
        if (arrays) os << " arrays=" << arrays;
        os << " target_re=" << res.target_re << " visited=" << res.subsets_visited
           << " tested=" << res.subsets_tested << " partitions=" << res.partitions
           << " resumed_from=" << res.resumed_from << "\n";
    }
}

int run_search_qo(const std::string& group_spec, const std::string& rep_name,
                  const std::string& z_text, const qoco::SearchOptions& opt,
                  const std::string& format, std::ostream& os) {
    qoco::GroupSpec spec = qoco::GroupSpec::parse(group_spec);
    qoco::GroupPtr g = qoco::build_group(spec);
    std::string rep_label = rep_name == "fz" ? "fz:" + z_text : rep_name;
    qoco::SearchSpace sp = qoco::make_search_space(g, representative(g, spec, rep_label));
    qoco::SearchResult res = qoco::enumerate_quasiorthogonal(sp, opt);
    for (const auto& hit : res.hits) {
        if (format == "jsonl")
            os << qoco::hit_json(sp, hit, rep_label).dump() << "\n";
        else
            os << "hit subset=" << join(hit.subset) << " re=" << hit.re
               << " row_sums=" << join(hit.row_sums) << "\n";
    }
    emit_search_summary(res, 0, format, os);
    return 0;
}

int run_search_goba(const std::string& s_text, const std::string& z_text,
                    const qoco::SearchOptions& opt, const std::string& format, std::ostream& os) {
    std::vector<int> s = parse_int_list(s_text, "--s");
    std::vector<int> z = parse_int_list(z_text, "--z");
    qoco::GobaSearchResult res = qoco::goba_search(s, z, opt);
    qoco::SearchSpace sp = qoco::make_search_space(qoco::build_abelian(s), qoco::f_z_cocycle(s, z));
    std::string rep_label = "fz:" + z_text;
    for (std::size_t i = 0; i < res.search.hits.size(); ++i) {
        const auto& hit = res.search.hits[i];
        for (std::size_t a = 2 * i; a < 2 * i + 2; ++a) {
            const qoco::BinaryArray& arr = res.arrays[a];
            std::string rle = qoco::rl_encode(arr.values);
            if (format == "jsonl")
                os << qoco::hit_json(sp, hit, rep_label, &rle).dump() << "\n";
            else
                os << "array signs=" << qoco::signs_to_string(arr.values) << " rle=" << rle
                   << " subset=" << join(hit.subset) << " re=" << hit.re << "\n";
        }
    }
    emit_search_summary(res.search, res.arrays.size(), format, os);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cocycle, binary-array, and negaperiodic-pair toolkit"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    std::string format = "text";
    std::string out_path;
    int workers = 1;
    int resume = 0;
    auto add_common = [&](CLI::App* cmd, bool with_workers) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "jsonl", "csv"}));
        cmd->add_option("--out", out_path, "write output to a file instead of stdout");
        if (with_workers) {
            cmd->add_option("--workers", workers, "worker thread count")
                ->check(CLI::PositiveNumber);
            cmd->add_option("--resume", resume,
                            "skip this many completed partitions from an earlier run");
        }
    };

    int rc = 0;
    auto dispatch = [&](const std::string& command, KV kv, bool csv_ok, auto runner) {
        require_format(format, csv_ok);
        Output out;
        out.open(out_path);
        emit_header(*out.os, command, std::move(kv), format, workers);
        rc = runner(*out.os);
    };

    // verify
    auto* verify = app.add_subcommand("verify", "check a claim and print the supporting census");
    verify->require_subcommand(1);
    std::string vp1, vp2, input_path, values_text, s_text, z_text;
    int len = -1;
    bool design = false;

    auto* vngp = verify->add_subcommand("ngp", "negaperiodic Golay pair");
    vngp->add_option("phi1", vp1, "first sequence, signs or run lengths; put -- after any options, before sign strings that start with -")
        ->required();
    vngp->add_option("phi2", vp2, "second sequence")->required();
    vngp->add_option("--len", len, "expected sequence length");
    vngp->add_flag("--design", design, "also build and verify the dicyclic difference set");
    add_common(vngp, false);
    vngp->callback([&] {
        KV kv;
        if (len > 0) kv.emplace_back("len", std::to_string(len));
        if (design) kv.emplace_back("design", "1");
        dispatch("verify ngp", std::move(kv), false, [&](std::ostream& os) {
            return run_verify_ngp(vp1, vp2, len, design, format, os);
        });
    });

    auto* vcoc = verify->add_subcommand("cocycle", "cocycle identity on a JSON matrix dump");
    vcoc->add_option("input", input_path,
                     "JSON matrix dump (group + rows) or search-hit record, - for stdin")
        ->required();
    vcoc->add_flag("--design", design,
                   "also build and verify the central-extension quasi-difference set");
    add_common(vcoc, false);
    vcoc->callback([&] {
        KV kv{{"input", input_path}};
        if (design) kv.emplace_back("design", "1");
        dispatch("verify cocycle", std::move(kv), false, [&](std::ostream& os) {
            return run_verify_cocycle(input_path, design, format, os);
        });
    });

    auto* vgoba = verify->add_subcommand("goba", "generalized optimal autocorrelation");
    vgoba->add_option("values", values_text,
                      "array values, signs or run lengths; put -- after any options, before sign strings that start with -")
        ->required();
    vgoba->add_option("--s", s_text, "array sizes, e.g. 6,3 (default: one dimension)");
    vgoba->add_option("--z", z_text, "expansion type bits, e.g. 1,0")->required();
    vgoba->add_flag("--design", design,
                    "also build and verify the quotient quasi-difference set");
    add_common(vgoba, false);
    vgoba->callback([&] {
        KV kv;
        if (!s_text.empty()) kv.emplace_back("s", s_text);
        kv.emplace_back("z", z_text);
        if (design) kv.emplace_back("design", "1");
        dispatch("verify goba", std::move(kv), false, [&](std::ostream& os) {
            return run_verify_goba(values_text, s_text, z_text, design, format, os);
        });
    });

    auto* vdesign = verify->add_subcommand("design", "difference-set certificate");
    vdesign->add_option("input", input_path, "certificate JSON file, - for stdin")->required();
    add_common(vdesign, false);
    vdesign->callback([&] {
        dispatch("verify design", {{"input", input_path}}, false,
                 [&](std::ostream& os) { return run_verify_design(input_path, format, os); });
    });

    // search
    auto* search = app.add_subcommand("search", "enumerate hits in a coboundary coset");
    search->require_subcommand(1);
    std::string group_spec, rep_name = "trivial";

    auto* sqo = search->add_subcommand("qo", "quasi-orthogonal cocycles");
    sqo->add_option("--group", group_spec, "group spec, e.g. a:6, a:2x3, d:3")->required();
    sqo->add_option("--rep", rep_name, "coset representative: trivial, gamma, fz, lambda, beta");
    sqo->add_option("--z", z_text, "type bits for --rep fz");
    add_common(sqo, true);
    sqo->callback([&] {
        KV kv{{"group", group_spec}, {"rep", rep_name}};
        if (!z_text.empty()) kv.emplace_back("z", z_text);
        kv.emplace_back("resume", std::to_string(resume));
        dispatch("search qo", std::move(kv), false, [&](std::ostream& os) {
            qoco::SearchOptions opt;
            opt.workers = workers;
            opt.resume = resume;
            return run_search_qo(group_spec, rep_name, z_text, opt, format, os);
        });
    });

    auto* sgoba = search->add_subcommand("goba", "arrays with optimal expanded autocorrelation");
    sgoba->add_option("--s", s_text, "array sizes, e.g. 2,3")->required();
    sgoba->add_option("--z", z_text, "expansion type bits, e.g. 1,0")->required();
    add_common(sgoba, true);
    sgoba->callback([&] {
        KV kv{{"s", s_text}, {"z", z_text}, {"resume", std::to_string(resume)}};
        dispatch("search goba", std::move(kv), false, [&](std::ostream& os) {
            qoco::SearchOptions opt;
            opt.workers = workers;
            opt.resume = resume;
            return run_search_goba(s_text, z_text, opt, format, os);
        });
    });

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "count pairs without materializing them");
    enumerate->require_subcommand(1);
    int k = 0;
    std::string source = "all";

    auto* engp = enumerate->add_subcommand("ngp", "negaperiodic Golay pairs of length 2k");
    engp->add_option("--k", k, "half length")->required();
    engp->add_option("--source", source, "candidate set")
        ->check(CLI::IsMember({"all", "gobs"}));
    add_common(engp, false);
    engp->callback([&] {
        dispatch("enumerate ngp", {{"k", std::to_string(k)}, {"source", source}}, true,
                 [&](std::ostream& os) { return run_enumerate(k, source, format, os); });
    });

    // classify
    auto* classify = app.add_subcommand("classify", "orbit count under pair equivalence");
    std::string what = "ngp", ops = "default";
    classify->add_option("what", what, "object kind (ngp)")->check(CLI::IsMember({"ngp"}));
    classify->add_option("--k", k, "half length")->required();
    classify->add_option("--source", source, "candidate set")
        ->check(CLI::IsMember({"all", "gobs"}));
    classify->add_option("--ops", ops,
                         "equivalence operation set: default, or a named variant toggling "
                         "reverse/shift to both members or decimation to alternate negation");
    add_common(classify, false);
    classify->callback([&] {
        dispatch("classify",
                 {{"what", what},
                  {"k", std::to_string(k)},
                  {"source", source},
                  {"ops", ops}},
                 true, [&](std::ostream& os) { return run_classify(k, source, ops, format, os); });
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const qoco::usage_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const qoco::resource_error& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return 3;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return rc;
}
