#include "rackforge.h"

#include <cstdlib>
#include <cstring>
#include <limits>
#include <sstream>
#include <string>

#include <json.hpp>

#include "core/averaging.hpp"
#include "core/chains.hpp"
#include "core/cubical.hpp"
#include "core/delta.hpp"
#include "core/error.hpp"
#include "core/homology.hpp"
#include "core/ik.hpp"
#include "core/quandle.hpp"
#include "core/ratseries.hpp"

using json = nlohmann::ordered_json;

struct rf_quandle {
    rf::Quandle q;
    std::string desc;
};

namespace {

thread_local std::string tl_error;

rf_status map_code(rf::ErrCode c) {
    switch (c) {
        case rf::ErrCode::AxiomQ1: return RF_ERR_AXIOM_Q1;
        case rf::ErrCode::AxiomQ2: return RF_ERR_AXIOM_Q2;
        case rf::ErrCode::AxiomQ3: return RF_ERR_AXIOM_Q3;
        case rf::ErrCode::BadUnit: return RF_ERR_BAD_UNIT;
        case rf::ErrCode::Parse: return RF_ERR_PARSE;
        case rf::ErrCode::Io: return RF_ERR_IO;
        case rf::ErrCode::TooLarge: return RF_ERR_TOO_LARGE;
        case rf::ErrCode::OutOfRange: return RF_ERR_OUT_OF_RANGE;
        case rf::ErrCode::NotAComplex: return RF_ERR_NOT_A_COMPLEX;
        case rf::ErrCode::NegativeRank: return RF_ERR_NEGATIVE_RANK;
        case rf::ErrCode::NonUnitConstantTerm: return RF_ERR_NON_UNIT_CONSTANT_TERM;
        case rf::ErrCode::NotCoinvariant: return RF_ERR_NOT_COINVARIANT;
        case rf::ErrCode::NotACocycle: return RF_ERR_NOT_A_COCYCLE;
        case rf::ErrCode::NotHomogeneous: return RF_ERR_NOT_HOMOGENEOUS;
        case rf::ErrCode::NoConsistentSigns: return RF_ERR_NO_CONSISTENT_SIGNS;
        case rf::ErrCode::Invalid: return RF_ERR_INVALID;
    }
    return RF_ERR_INVALID;
}

template <class F>
rf_status guarded(F&& f) noexcept {
    try {
        f();
        return RF_OK;
    } catch (const rf::Error& e) {
        tl_error = e.what();
        return map_code(e.code);
    } catch (const std::exception& e) {
        tl_error = e.what();
        return RF_ERR_INVALID;
    } catch (...) {
        tl_error = "unknown error";
        return RF_ERR_INVALID;
    }
}

char* dup_string(const std::string& s) {
    char* p = (char*)std::malloc(s.size() + 1);
    if (!p) throw std::bad_alloc();
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

json int_json(const rf::Int& v) {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return (long long)v.convert_to<long long>();
    return v.str();
}

std::string torsion_str(const std::vector<rf::Int>& t) {
    std::string s = "[";
    for (size_t i = 0; i < t.size(); ++i) {
        if (i) s += ",";
        s += t[i].str();
    }
    return s + "]";
}

std::string tuple_key(const std::vector<int>& t) {
    std::string s;
    for (size_t i = 0; i < t.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(t[i]);
    }
    return s;
}

std::vector<int> parse_tuple_key(const std::string& key, int q) {
    std::vector<int> out;
    if (key.empty()) return out;
    std::stringstream ss(key);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t beg = tok.find_first_not_of(" \t");
        size_t end = tok.find_last_not_of(" \t");
        if (beg == std::string::npos) throw rf::Error(rf::ErrCode::Parse, "empty tuple entry in '" + key + "'");
        tok = tok.substr(beg, end - beg + 1);
        size_t pos = 0;
        long v = 0;
        try {
            v = std::stol(tok, &pos);
        } catch (const std::exception&) {
            throw rf::Error(rf::ErrCode::Parse, "bad tuple entry '" + tok + "'");
        }
        if (pos != tok.size()) throw rf::Error(rf::ErrCode::Parse, "bad tuple entry '" + tok + "'");
        if (v < 0 || v >= q) throw rf::Error(rf::ErrCode::OutOfRange, "tuple entry " + tok + " outside 0.." + std::to_string(q - 1));
        out.push_back((int)v);
    }
    return out;
}

rf::Rat parse_value(const json& v) {
    if (v.is_string()) return rf::parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return rf::Rat((long long)v.get<long long>());
    throw rf::Error(rf::ErrCode::Parse, "cochain values must be rational strings or integers");
}

json parse_json_text(const char* text) {
    if (!text) throw rf::Error(rf::ErrCode::Parse, "null JSON input");
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw rf::Error(rf::ErrCode::Parse, "malformed JSON");
    return j;
}

// keys: comma-separated tuples of the given arity; absent tuples are 0.
rf::RationalCochain cochain_from_json(const rf::Quandle& Q, int degree, const char* text) {
    if (degree < 0) throw rf::Error(rf::ErrCode::OutOfRange, "negative degree");
    json j = parse_json_text(text);
    if (!j.is_object()) throw rf::Error(rf::ErrCode::Parse, "cochain JSON must be an object");
    rf::RationalCochain f(degree, Q.n);
    for (const auto& [key, val] : j.items()) {
        std::vector<int> t = parse_tuple_key(key, Q.n);
        if ((int)t.size() != degree)
            throw rf::Error(rf::ErrCode::Parse, "tuple '" + key + "' does not have " + std::to_string(degree) + " entries");
        f.at(rf::tuple_index(t, Q.n)) = parse_value(val);
    }
    return f;
}

std::vector<rf::Int> parse_betti_csv(const char* csv) {
    if (!csv) throw rf::Error(rf::ErrCode::Parse, "null Betti profile");
    std::vector<rf::Int> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t beg = tok.find_first_not_of(" \t");
        size_t end = tok.find_last_not_of(" \t");
        if (beg == std::string::npos) throw rf::Error(rf::ErrCode::Parse, "empty Betti entry");
        tok = tok.substr(beg, end - beg + 1);
        for (size_t i = 0; i < tok.size(); ++i)
            if ((tok[i] < '0' || tok[i] > '9') && !(i == 0 && tok[i] == '+'))
                throw rf::Error(rf::ErrCode::Parse, "bad Betti entry '" + tok + "'");
        out.emplace_back(tok);
    }
    if (out.empty()) throw rf::Error(rf::ErrCode::Parse, "empty Betti profile");
    return out;
}

}  // namespace

extern "C" {

const char* rf_version(void) { return "1.0.0"; }

const char* rf_last_error(void) { return tl_error.c_str(); }

void rf_string_free(char* s) { std::free(s); }

rf_status rf_quandle_parse(const char* descriptor, rf_quandle** out) {
    return guarded([&] {
        if (!descriptor || !out) throw rf::Error(rf::ErrCode::Invalid, "null argument");
        auto* h = new rf_quandle{rf::parse_descriptor(descriptor), descriptor};
        *out = h;
    });
}

rf_status rf_quandle_from_file(const char* path, rf_quandle** out) {
    return guarded([&] {
        if (!path || !out) throw rf::Error(rf::ErrCode::Invalid, "null argument");
        auto* h = new rf_quandle{rf::load_table_file(path), std::string("table:") + path};
        *out = h;
    });
}

rf_status rf_quandle_from_table(const int* table, int n, rf_quandle** out) {
    return guarded([&] {
        if (!table || !out) throw rf::Error(rf::ErrCode::Invalid, "null argument");
        if (n < 1) throw rf::Error(rf::ErrCode::Invalid, "quandle size out of range");
        std::vector<std::vector<int>> t(n, std::vector<int>(n));
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) t[x][y] = table[(size_t)x * n + y];
        auto* h = new rf_quandle{rf::make_from_table(t), "table"};
        *out = h;
    });
}

void rf_quandle_free(rf_quandle* q) { delete q; }

int rf_quandle_size(const rf_quandle* q) { return q ? q->q.n : 0; }

int rf_quandle_op(const rf_quandle* q, int x, int y) {
    if (!q || x < 0 || y < 0 || x >= q->q.n || y >= q->q.n) return -1;
    return q->q.op(x, y);
}

int rf_quandle_inv_op(const rf_quandle* q, int x, int y) {
    if (!q || x < 0 || y < 0 || x >= q->q.n || y >= q->q.n) return -1;
    return q->q.inv_op(x, y);
}

rf_status rf_quandle_is_connected(const rf_quandle* q, int* out) {
    return guarded([&] {
        if (!q || !out) throw rf::Error(rf::ErrCode::Invalid, "null argument");
        *out = rf::is_connected(q->q) ? 1 : 0;
    });
}

rf_status rf_quandle_is_left_homogeneous(const rf_quandle* q, int* out) {
    return guarded([&] {
        if (!q || !out) throw rf::Error(rf::ErrCode::Invalid, "null argument");
        *out = rf::is_left_homogeneous(q->q) ? 1 : 0;
    });
}

rf_status rf_quandle_type(const rf_quandle* q, int* out) {
    return guarded([&] {
        if (!q || !out) throw rf::Error(rf::ErrCode::Invalid, "null argument");
        *out = rf::quandle_type(q->q);
    });
}

rf_status rf_quandle_orbit_count(const rf_quandle* q, int* out) {
    return guarded([&] {
        if (!q || !out) throw rf::Error(rf::ErrCode::Invalid, "null argument");
        *out = rf::orbit_count(q->q);
    });
}

rf_status rf_quandle_inner_order(const rf_quandle* q, long long* out) {
    return guarded([&] {
        if (!q || !out) throw rf::Error(rf::ErrCode::Invalid, "null argument");
        *out = (long long)rf::inner_group(q->q).perms.size();
    });
}

rf_status rf_homology_json(const rf_quandle* q, int degree, char** out) {
    return guarded([&] {
        if (!q || !out) throw rf::Error(rf::ErrCode::Invalid, "null argument");
        rf::HomologyResult h = rf::rack_homology(q->q, degree);
        json j;
        j["quandle"] = q->desc;
        j["degree"] = h.degree;
        j["betti"] = h.betti;
        json tor = json::array();
        for (const auto& d : h.torsion) tor.push_back(int_json(d));
        j["torsion"] = std::move(tor);
        *out = dup_string(j.dump());
    });
}

rf_status rf_ranks_tsv(const char* betti_csv, int depth, char** out) {
    return guarded([&] {
        if (!out) throw rf::Error(rf::ErrCode::Invalid, "null argument");
        if (depth < 1) throw rf::Error(rf::ErrCode::OutOfRange, "depth must be >= 1");
        std::vector<rf::Int> betti = parse_betti_csv(betti_csv);
        std::vector<rf::Int> u = rf::extract_ranks(rf::bq_series(betti, depth), depth);
        std::string s = "k\trank";
        for (int k = 1; k <= depth; ++k) s += "\n" + std::to_string(k) + "\t" + u[k - 1].str();
        *out = dup_string(s);
    });
}

rf_status rf_triangulate_summary(const rf_quandle* q, int truncate, char** out) {
    return guarded([&] {
        if (!q || !out) throw rf::Error(rf::ErrCode::Invalid, "null argument");
        rf::CubicalSet X = rf::rack_space(q->q, false, truncate);
        rf::DeltaSet D = rf::triangulate(X);
        std::string s = "truncation: " + std::to_string(truncate) + "\nsimplices by degree:";
        for (int k = 0; k <= D.max_degree; ++k) s += " " + std::to_string(D.simplex_count(k));
        *out = dup_string(s);
    });
}

rf_status rf_triangulate_compare(const rf_quandle* q, int truncate, int* ok, char** out) {
    return guarded([&] {
        if (!q || !ok || !out) throw rf::Error(rf::ErrCode::Invalid, "null argument");
        if (truncate < 2) throw rf::Error(rf::ErrCode::OutOfRange, "comparison needs truncation >= 2");
        rf::CubicalSet X = rf::rack_space(q->q, false, truncate);
        rf::DeltaSet D = rf::triangulate(X);
        for (int n = 0; n <= truncate - 2; ++n) {
            rf::HomologyResult hc = rf::cubical_homology(X, n);
            rf::HomologyResult hd = rf::delta_homology(D, n);
            if (hc.betti != hd.betti || hc.torsion != hd.torsion) {
                *ok = 0;
                *out = dup_string("cubical == simplicial: MISMATCH at degree " + std::to_string(n) +
                                  ": betti " + std::to_string(hc.betti) + " vs " + std::to_string(hd.betti) +
                                  ", torsion " + torsion_str(hc.torsion) + " vs " + torsion_str(hd.torsion));
                return;
            }
        }
        *ok = 1;
        *out = dup_string("cubical == simplicial: OK (degrees 0.." + std::to_string(truncate - 2) + ")");
    });
}

rf_status rf_delta_export_json(const rf_quandle* q, int truncate, char** out) {
    return guarded([&] {
        if (!q || !out) throw rf::Error(rf::ErrCode::Invalid, "null argument");
        rf::CubicalSet X = rf::rack_space(q->q, false, truncate);
        rf::DeltaSet D = rf::triangulate(X);
        json arr = json::array();
        for (int k = 0; k <= D.max_degree; ++k) {
            json rec;
            rec["degree"] = k;
            json simps = json::array();
            json faces = json::array();
            const long long nc = D.simplex_count(k);
            for (long long idx = 0; idx < nc; ++idx) {
                rf::DeltaSet::Simplex s = D.simplex(k, idx);
                json rs;
                rs["cell"] = X.decode(s.n, s.cell);
                rs["partition"] = (k == 0) ? json::array() : json(D.parts[k][s.n - k][s.pi]);
                simps.push_back(std::move(rs));
                if (k >= 1) {
                    json fs = json::array();
                    for (int i = 0; i <= k; ++i) fs.push_back(D.face(k, idx, i));
                    faces.push_back(std::move(fs));
                }
            }
            rec["simplices"] = std::move(simps);
            rec["faces"] = std::move(faces);
            arr.push_back(std::move(rec));
        }
        *out = dup_string(arr.dump());
    });
}

rf_status rf_ik_verify_report(const rf_quandle* q, int max_degree, int basepoint, int seeded,
                              unsigned long long seed, int* ok, char** out) {
    return guarded([&] {
        if (!q || !ok || !out) throw rf::Error(rf::ErrCode::Invalid, "null argument");
        if (max_degree < 1) throw rf::Error(rf::ErrCode::OutOfRange, "max degree must be >= 1");
        auto reports = rf::ik_verify(q->q, max_degree, basepoint, seeded, seed);
        *ok = 1;
        std::string s;
        for (const auto& r : reports) {
            if (!s.empty()) s += "\n";
            s += "degree " + std::to_string(r.degree) + ": " + std::to_string(r.checked) +
                 " generators (" + (r.exhaustive ? "exhaustive" : "seeded") + "): ";
            if (r.ok) {
                s += "OK";
            } else {
                *ok = 0;
                s += "FAIL at (" + tuple_key(r.witness) + ")";
            }
        }
        *out = dup_string(s);
    });
}

rf_status rf_ik_pullback_json(const rf_quandle* q, const char* cocycle_json, int basepoint,
                              int* is_cocycle, char** out) {
    return guarded([&] {
        if (!q || !is_cocycle || !out) throw rf::Error(rf::ErrCode::Invalid, "null argument");
        json j = parse_json_text(cocycle_json);
        if (!j.is_object() || j.empty())
            throw rf::Error(rf::ErrCode::Parse, "cocycle JSON must be a non-empty object");
        std::map<std::vector<int>, rf::Rat> f;
        int arity = -1;
        for (const auto& [key, val] : j.items()) {
            std::vector<int> t = parse_tuple_key(key, q->q.n);
            if (arity < 0)
                arity = (int)t.size();
            else if ((int)t.size() != arity)
                throw rf::Error(rf::ErrCode::Parse, "tuple '" + key + "' has inconsistent arity");
            f[std::move(t)] = parse_value(val);
        }
        if (arity < 2) throw rf::Error(rf::ErrCode::OutOfRange, "homogeneous tuples need at least 2 entries");
        const int qdeg = arity - 1;
        rf::InnerGroup G = rf::inner_group(q->q);
        rf::RationalCochain pb = rf::pullback_cocycle(q->q, G, qdeg, f, basepoint);
        const bool cocycle = rf::is_rack_cocycle(pb, q->q);
        *is_cocycle = cocycle ? 1 : 0;
        json outj;
        outj["degree"] = qdeg;
        json table;
        const long long total = rf::tuple_count(q->q.n, qdeg);
        for (long long idx = 0; idx < total; ++idx)
            table[tuple_key(rf::tuple_decode(idx, q->q.n, qdeg))] = rf::rational_str(pb.at(idx));
        outj["pullback"] = std::move(table);
        outj["is_rack_cocycle"] = cocycle;
        *out = dup_string(outj.dump());
    });
}

rf_status rf_trivialize_json(const rf_quandle* q, int degree, const char* cocycle_json,
                             char** out) {
    return guarded([&] {
        if (!q || !out) throw rf::Error(rf::ErrCode::Invalid, "null argument");
        if (degree < 1) throw rf::Error(rf::ErrCode::OutOfRange, "degree must be >= 1");
        rf::RationalCochain f = cochain_from_json(q->q, degree, cocycle_json);
        rf::Trivialization tr = rf::trivialize_cocycle(q->q, f);
        json j;
        j["c"] = rf::rational_str(tr.c);
        json g;
        const long long total = rf::tuple_count(q->q.n, degree - 1);
        for (long long idx = 0; idx < total; ++idx)
            g[tuple_key(rf::tuple_decode(idx, q->q.n, degree - 1))] = rf::rational_str(tr.g.at(idx));
        j["g"] = std::move(g);
        *out = dup_string(j.dump());
    });
}

rf_status rf_cochain_is_cocycle(const rf_quandle* q, int degree, const char* cocycle_json,
                                int* ok) {
    return guarded([&] {
        if (!q || !ok) throw rf::Error(rf::ErrCode::Invalid, "null argument");
        if (degree < 1) throw rf::Error(rf::ErrCode::OutOfRange, "degree must be >= 1");
        rf::RationalCochain f = cochain_from_json(q->q, degree, cocycle_json);
        *ok = rf::is_rack_cocycle(f, q->q) ? 1 : 0;
    });
}

rf_status rf_det_cocycle_report(int samples, unsigned long long seed, int* ok, char** out) {
    return guarded([&] {
        if (!ok || !out) throw rf::Error(rf::ErrCode::Invalid, "null argument");
        if (samples < 1) throw rf::Error(rf::ErrCode::OutOfRange, "sample count must be >= 1");
        rf::DetCocycleReport rep = rf::det_cocycle_check(rf::seeded_plane_triples(samples, seed));
        *ok = rep.failures == 0 ? 1 : 0;
        std::string s = "determinant 2-cocycle: coboundary on " + std::to_string(rep.checked) +
                        " seeded rational triples: ";
        s += rep.failures == 0 ? "all zero" : std::to_string(rep.failures) + " nonzero";
        *out = dup_string(s);
    });
}

}  // extern "C"
