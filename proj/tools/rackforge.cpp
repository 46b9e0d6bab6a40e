// Command-line front end. Links only the public C API.
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "rackforge.h"

namespace {

struct QuandleDeleter {
    void operator()(rf_quandle* q) const { rf_quandle_free(q); }
};
using QuandlePtr = std::unique_ptr<rf_quandle, QuandleDeleter>;

struct StrDeleter {
    void operator()(char* s) const { rf_string_free(s); }
};
using StrPtr = std::unique_ptr<char, StrDeleter>;

// Exit codes: 1 for malformed input, 2 for a verification that ran and
// failed.
int exit_for(rf_status st) {
    switch (st) {
        case RF_OK:
            return 0;
        case RF_ERR_NOT_A_COMPLEX:
        case RF_ERR_NEGATIVE_RANK:
        case RF_ERR_NOT_COINVARIANT:
        case RF_ERR_NOT_A_COCYCLE:
        case RF_ERR_NOT_HOMOGENEOUS:
        case RF_ERR_NO_CONSISTENT_SIGNS:
            return 2;
        default:
            return 1;
    }
}

int fail(rf_status st) {
    std::cerr << "error: " << rf_last_error() << "\n";
    return exit_for(st);
}

bool has_descriptor_prefix(const std::string& s) {
    return s.rfind("trivial:", 0) == 0 || s.rfind("dihedral:", 0) == 0 ||
           s.rfind("alexander:", 0) == 0 || s.rfind("table:", 0) == 0;
}

// Accepts a descriptor (trivial:n, dihedral:n, alexander:N:w, table:<path>)
// or a bare path to a table file.
rf_status open_quandle(const std::string& spec, QuandlePtr& out) {
    rf_quandle* raw = nullptr;
    rf_status st = has_descriptor_prefix(spec) ? rf_quandle_parse(spec.c_str(), &raw)
                                               : rf_quandle_from_file(spec.c_str(), &raw);
    out.reset(raw);
    return st;
}

bool read_text(const std::string& path, std::string& out, std::string& err) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        out = ss.str();
        return true;
    }
    std::ifstream in(path);
    if (!in) {
        err = "cannot open " + path;
        return false;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    out = ss.str();
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rackforge: finite quandles, rack homology, and cocycle tools"};
    app.require_subcommand(1);
    app.set_version_flag("--version", rf_version());

    std::string quandle_spec;
    std::string cocycle_path;
    std::string export_path;
    std::string betti_csv;
    int degree = 0;
    int depth = 17;
    int truncate = 3;
    int max_degree = 3;
    int basepoint = 0;
    int samples = 100;
    unsigned long long seed = 0;
    bool as_json = false;
    bool do_compare = false;

    CLI::App* c_check = app.add_subcommand("check", "Validate a quandle and print its structure");
    c_check->add_option("--quandle", quandle_spec, "Descriptor or table file")->required();

    CLI::App* c_hom = app.add_subcommand("homology", "Rack homology of a quandle");
    c_hom->add_option("--quandle", quandle_spec, "Descriptor or table file")->required();
    c_hom->add_option("--degree", degree, "Homology degree")->required();
    c_hom->add_flag("--json", as_json, "Emit the JSON record");

    CLI::App* c_tri = app.add_subcommand("triangulate", "Triangulate a truncated rack space");
    c_tri->add_option("--quandle", quandle_spec, "Descriptor or table file")->required();
    c_tri->add_option("--truncate", truncate, "Top cell degree")->required();
    c_tri->add_flag("--compare", do_compare, "Compare cubical and simplicial homology");
    c_tri->add_option("--export", export_path, "Write the full simplex/face table (path or -)");

    CLI::App* c_ranks = app.add_subcommand("ranks", "Homotopy ranks from a Betti profile");
    c_ranks->add_option("--betti", betti_csv, "Comma-separated Betti numbers, e.g. 1,0,1")->required();
    c_ranks->add_option("--depth", depth, "Extraction depth");

    CLI::App* c_ik = app.add_subcommand("ik", "Chain map to the coinvariant homogeneous complex");
    c_ik->require_subcommand(1);
    CLI::App* c_ikv = c_ik->add_subcommand("verify", "Verify the chain-map identity per degree");
    c_ikv->add_option("--quandle", quandle_spec, "Descriptor or table file")->required();
    c_ikv->add_option("--max-degree", max_degree, "Top degree to verify");
    c_ikv->add_option("--basepoint", basepoint, "Basepoint element");
    c_ikv->add_option("--samples", samples, "Seeded generators per degree above 3");
    c_ikv->add_option("--seed", seed, "Random seed");
    CLI::App* c_ikp = c_ik->add_subcommand("pullback", "Pull a coinvariant cocycle back to a rack cochain");
    c_ikp->add_option("--quandle", quandle_spec, "Descriptor or table file")->required();
    c_ikp->add_option("--cocycle", cocycle_path, "JSON file mapping tuples to rationals (- for stdin)")->required();
    c_ikp->add_option("--basepoint", basepoint, "Basepoint element");

    CLI::App* c_triv = app.add_subcommand("trivialize", "Write a cocycle as constant + coboundary");
    c_triv->add_option("--quandle", quandle_spec, "Descriptor or table file")->required();
    c_triv->add_option("--degree", degree, "Cocycle degree")->required();
    c_triv->add_option("--cocycle", cocycle_path, "JSON file mapping tuples to rationals (- for stdin)")->required();

    CLI::App* c_coc = app.add_subcommand("cocycle", "Cocycle checks");
    c_coc->require_subcommand(1);
    CLI::App* c_cdet = c_coc->add_subcommand("det", "Determinant 2-cocycle coboundary check on seeded triples");
    c_cdet->add_option("--samples", samples, "Number of seeded triples");
    c_cdet->add_option("--seed", seed, "Random seed");
    CLI::App* c_cchk = c_coc->add_subcommand("check", "Rack cocycle condition for a rational cochain");
    c_cchk->add_option("--quandle", quandle_spec, "Descriptor or table file")->required();
    c_cchk->add_option("--degree", degree, "Cochain degree")->required();
    c_cchk->add_option("--cocycle", cocycle_path, "JSON file mapping tuples to rationals (- for stdin)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    QuandlePtr Q;
    if (*c_check) {
        rf_status st = open_quandle(quandle_spec, Q);
        if (st != RF_OK) return fail(st);
        int conn = 0, homog = 0, type = 0, orbits = 0;
        long long inner = 0;
        if ((st = rf_quandle_is_connected(Q.get(), &conn)) != RF_OK) return fail(st);
        if ((st = rf_quandle_is_left_homogeneous(Q.get(), &homog)) != RF_OK) return fail(st);
        if ((st = rf_quandle_type(Q.get(), &type)) != RF_OK) return fail(st);
        if ((st = rf_quandle_orbit_count(Q.get(), &orbits)) != RF_OK) return fail(st);
        if ((st = rf_quandle_inner_order(Q.get(), &inner)) != RF_OK) return fail(st);
        std::cout << "quandle: " << quandle_spec << "\n"
                  << "size: " << rf_quandle_size(Q.get()) << "\n"
                  << "axioms: OK\n"
                  << "connected: " << (conn ? "yes" : "no") << "\n"
                  << "left-homogeneous: " << (homog ? "yes" : "no") << "\n"
                  << "type: " << type << "\n"
                  << "orbits: " << orbits << "\n"
                  << "inner-order: " << inner << "\n";
        return 0;
    }

    if (*c_hom) {
        rf_status st = open_quandle(quandle_spec, Q);
        if (st != RF_OK) return fail(st);
        char* s = nullptr;
        if ((st = rf_homology_json(Q.get(), degree, &s)) != RF_OK) return fail(st);
        StrPtr guard(s);
        if (as_json) {
            std::cout << s << "\n";
        } else {
            // betti/torsion live in the JSON record; reprint the human line
            std::string js(s);
            auto grab = [&](const std::string& key) {
                size_t p = js.find("\"" + key + "\":");
                p = js.find(':', p) + 1;
                size_t e = p;
                int depth_brackets = 0;
                while (e < js.size() && (depth_brackets > 0 || (js[e] != ',' && js[e] != '}'))) {
                    if (js[e] == '[') ++depth_brackets;
                    if (js[e] == ']') --depth_brackets;
                    ++e;
                }
                return js.substr(p, e - p);
            };
            std::cout << "H_" << degree << ": betti=" << grab("betti") << " torsion=" << grab("torsion")
                      << "\n";
        }
        return 0;
    }

    if (*c_tri) {
        rf_status st = open_quandle(quandle_spec, Q);
        if (st != RF_OK) return fail(st);
        int rc = 0;
        if (!export_path.empty()) {
            char* s = nullptr;
            if ((st = rf_delta_export_json(Q.get(), truncate, &s)) != RF_OK) return fail(st);
            StrPtr guard(s);
            if (export_path == "-") {
                std::cout << s << "\n";
            } else {
                std::ofstream out(export_path);
                if (!out) {
                    std::cerr << "error: cannot write " << export_path << "\n";
                    return 1;
                }
                out << s << "\n";
            }
        }
        if (do_compare) {
            int ok = 0;
            char* s = nullptr;
            if ((st = rf_triangulate_compare(Q.get(), truncate, &ok, &s)) != RF_OK) return fail(st);
            StrPtr guard(s);
            std::cout << s << "\n";
            if (!ok) rc = 2;
        }
        if (export_path.empty() && !do_compare) {
            char* s = nullptr;
            if ((st = rf_triangulate_summary(Q.get(), truncate, &s)) != RF_OK) return fail(st);
            StrPtr guard(s);
            std::cout << s << "\n";
        }
        return rc;
    }

    if (*c_ranks) {
        char* s = nullptr;
        rf_status st = rf_ranks_tsv(betti_csv.c_str(), depth, &s);
        if (st != RF_OK) return fail(st);
        StrPtr guard(s);
        std::cout << s << "\n";
        return 0;
    }

    if (*c_ikv) {
        rf_status st = open_quandle(quandle_spec, Q);
        if (st != RF_OK) return fail(st);
        int ok = 0;
        char* s = nullptr;
        if ((st = rf_ik_verify_report(Q.get(), max_degree, basepoint, samples, seed, &ok, &s)) != RF_OK)
            return fail(st);
        StrPtr guard(s);
        std::cout << s << "\n";
        return ok ? 0 : 2;
    }

    if (*c_ikp) {
        rf_status st = open_quandle(quandle_spec, Q);
        if (st != RF_OK) return fail(st);
        std::string text, err;
        if (!read_text(cocycle_path, text, err)) {
            std::cerr << "error: " << err << "\n";
            return 1;
        }
        int is_cocycle = 0;
        char* s = nullptr;
        if ((st = rf_ik_pullback_json(Q.get(), text.c_str(), basepoint, &is_cocycle, &s)) != RF_OK)
            return fail(st);
        StrPtr guard(s);
        std::cout << s << "\n";
        return 0;
    }

    if (*c_triv) {
        rf_status st = open_quandle(quandle_spec, Q);
        if (st != RF_OK) return fail(st);
        std::string text, err;
        if (!read_text(cocycle_path, text, err)) {
            std::cerr << "error: " << err << "\n";
            return 1;
        }
        char* s = nullptr;
        if ((st = rf_trivialize_json(Q.get(), degree, text.c_str(), &s)) != RF_OK) return fail(st);
        StrPtr guard(s);
        std::cout << s << "\n";
        return 0;
    }

    if (*c_cdet) {
        int ok = 0;
        char* s = nullptr;
        rf_status st = rf_det_cocycle_report(samples, seed, &ok, &s);
        if (st != RF_OK) return fail(st);
        StrPtr guard(s);
        std::cout << s << "\n";
        return ok ? 0 : 2;
    }

    if (*c_cchk) {
        rf_status st = open_quandle(quandle_spec, Q);
        if (st != RF_OK) return fail(st);
        std::string text, err;
        if (!read_text(cocycle_path, text, err)) {
            std::cerr << "error: " << err << "\n";
            return 1;
        }
        int ok = 0;
        if ((st = rf_cochain_is_cocycle(Q.get(), degree, text.c_str(), &ok)) != RF_OK) return fail(st);
        std::cout << (ok ? "cocycle: yes" : "cocycle: no") << "\n";
        return ok ? 0 : 2;
    }

    return 0;
}
