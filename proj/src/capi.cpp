/*
   Copyright 2026 The poincare-series authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "poincare.h"

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>

#include "poincare/counting.hpp"
#include "poincare/poincare_series.hpp"
#include "poincare/render.hpp"

struct psq_series {
    poincare::PoincareResult result;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

psq_status fail(psq_status st, const std::string& message) {
    g_last_error = message;
    return st;
}

template <typename Fn>
psq_status guarded(Fn&& fn) {
    try {
        g_last_error.clear();
        return fn();
    } catch (const std::invalid_argument& e) {
        return fail(PSQ_USAGE, e.what());
    } catch (const std::domain_error& e) {
        return fail(PSQ_USAGE, e.what());
    } catch (const std::runtime_error& e) {
        return fail(PSQ_IO, e.what());
    } catch (const std::exception& e) {
        return fail(PSQ_INTERNAL, e.what());
    }
}

poincare::SeriesKind to_kind(psq_kind kind) {
    if (kind != PSQ_INVARIANTS && kind != PSQ_COVARIANTS)
        throw std::invalid_argument("unknown kind");
    return kind == PSQ_INVARIANTS ? poincare::SeriesKind::invariants
                                  : poincare::SeriesKind::covariants;
}

}  // namespace

extern "C" {

const char* psq_version(void) { return "1.0.0"; }

const char* psq_status_name(psq_status st) {
    switch (st) {
        case PSQ_OK: return "ok";
        case PSQ_USAGE: return "usage";
        case PSQ_MISMATCH: return "mismatch";
        case PSQ_IO: return "io";
        case PSQ_INTERNAL: return "internal";
    }
    return "unknown";
}

const char* psq_last_error(void) { return g_last_error.c_str(); }

psq_status psq_series_compute(int d1, int d2, psq_kind kind, int terms,
                              psq_series** out) {
    if (!out) return fail(PSQ_USAGE, "null output pointer");
    *out = nullptr;
    return guarded([&]() {
        if (d1 < 1 || d2 < 1)
            throw std::invalid_argument("degrees must be >= 1");
        poincare::PoincareResult result =
            poincare::poincare_series(poincare::FormPair(d1, d2), to_kind(kind));
        poincare::attach_presentation(result);
        if (terms > 0) poincare::attach_series(result, terms - 1);
        *out = new psq_series{std::move(result)};
        return PSQ_OK;
    });
}

psq_status psq_series_parse_json(const char* json, size_t len, psq_series** out) {
    if (!out) return fail(PSQ_USAGE, "null output pointer");
    *out = nullptr;
    if (!json) return fail(PSQ_USAGE, "null input");
    return guarded([&]() {
        *out = new psq_series{
            poincare::parse_result_json(std::string_view(json, len))};
        return PSQ_OK;
    });
}

void psq_series_free(psq_series* s) { delete s; }

int psq_series_d1(const psq_series* s) { return s ? s->result.pair.d1() : 0; }
int psq_series_d2(const psq_series* s) { return s ? s->result.pair.d2() : 0; }

psq_kind psq_series_kind(const psq_series* s) {
    return s && s->result.kind == poincare::SeriesKind::covariants
               ? PSQ_COVARIANTS
               : PSQ_INVARIANTS;
}

psq_status psq_series_render(const psq_series* s, psq_format format, char** out) {
    if (!out) return fail(PSQ_USAGE, "null output pointer");
    *out = nullptr;
    if (!s) return fail(PSQ_USAGE, "null series handle");
    return guarded([&]() {
        poincare::RenderFormat fmt;
        switch (format) {
            case PSQ_TEXT: fmt = poincare::RenderFormat::text; break;
            case PSQ_LATEX: fmt = poincare::RenderFormat::latex; break;
            case PSQ_JSON: fmt = poincare::RenderFormat::json; break;
            default: throw std::invalid_argument("unknown format");
        }
        *out = dup_string(poincare::render(s->result, fmt));
        return *out ? PSQ_OK : fail(PSQ_INTERNAL, "allocation failure");
    });
}

psq_status psq_series_coefficient(const psq_series* s, int n, char** out) {
    if (!out) return fail(PSQ_USAGE, "null output pointer");
    *out = nullptr;
    if (!s) return fail(PSQ_USAGE, "null series handle");
    return guarded([&]() {
        if (n < 0) throw std::invalid_argument("negative degree");
        mpz_class c;
        if (s->result.series && n < static_cast<int>(s->result.series->size())) {
            c = (*s->result.series)[n];
        } else {
            c = poincare::series_prefix(s->result.value, n).back();
        }
        *out = dup_string(c.get_str());
        return *out ? PSQ_OK : fail(PSQ_INTERNAL, "allocation failure");
    });
}

void psq_string_free(char* s) { std::free(s); }

psq_status psq_series_verify(const psq_series* s, int terms, int* first_mismatch) {
    if (first_mismatch) *first_mismatch = -1;
    if (!s) return fail(PSQ_USAGE, "null series handle");
    return guarded([&]() -> psq_status {
        if (terms <= 0) return PSQ_OK;
        const auto prefix = poincare::series_prefix(s->result.value, terms - 1);
        poincare::OmegaTable oracle(s->result.pair, terms - 1);
        const bool invariants =
            s->result.kind == poincare::SeriesKind::invariants;
        for (int n = 0; n < terms; ++n) {
            const mpz_class expected = invariants ? oracle.dim_invariants(n)
                                                  : oracle.dim_covariants(n);
            if (prefix[n] != expected) {
                if (first_mismatch) *first_mismatch = n;
                std::ostringstream os;
                os << "coefficient of z^" << n << " is " << prefix[n].get_str()
                   << ", counting oracle gives " << expected.get_str();
                return fail(PSQ_MISMATCH, os.str());
            }
            if (s->result.series && n < static_cast<int>(s->result.series->size()) &&
                (*s->result.series)[n] != prefix[n]) {
                if (first_mismatch) *first_mismatch = n;
                std::ostringstream os;
                os << "stored series coefficient of z^" << n << " is "
                   << (*s->result.series)[n].get_str()
                   << ", value expands to " << prefix[n].get_str();
                return fail(PSQ_MISMATCH, os.str());
            }
        }
        return PSQ_OK;
    });
}

psq_status psq_dimension(int d1, int d2, psq_kind kind, int n, char** out) {
    if (!out) return fail(PSQ_USAGE, "null output pointer");
    *out = nullptr;
    return guarded([&]() {
        if (d1 < 1 || d2 < 1)
            throw std::invalid_argument("degrees must be >= 1");
        if (n < 0) throw std::invalid_argument("negative degree");
        const poincare::FormPair pair(d1, d2);
        const mpz_class value = to_kind(kind) == poincare::SeriesKind::invariants
                                    ? poincare::dim_invariants(pair, n)
                                    : poincare::dim_covariants(pair, n);
        *out = dup_string(value.get_str());
        return *out ? PSQ_OK : fail(PSQ_INTERNAL, "allocation failure");
    });
}

}  // extern "C"
