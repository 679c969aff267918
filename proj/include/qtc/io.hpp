// Copyright 2026 The qtc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/// \file
/// Stable machine-readable output: trace CSV (`step,observable_label,outcome`)
/// and JSON reports. All floating-point values are serialized with 17
/// significant digits so they round-trip to the exact double.

#pragma once

#include <cstdint>
#include <cstdio>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "qtc/simulate.hpp"

namespace qtc {

inline std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace json {

/// Minimal streaming JSON writer. Keys keep insertion order; doubles are
/// emitted with %.17g (non-finite values become null).
class Writer {
  public:
    Writer& begin_object() {
        separate();
        out_ += '{';
        stack_.push_back(true);
        return *this;
    }
    Writer& end_object() {
        out_ += '}';
        stack_.pop_back();
        return *this;
    }
    Writer& begin_array() {
        separate();
        out_ += '[';
        stack_.push_back(true);
        return *this;
    }
    Writer& end_array() {
        out_ += ']';
        stack_.pop_back();
        return *this;
    }
    Writer& key(std::string_view k) {
        separate();
        append_string(k);
        out_ += ':';
        pending_value_ = true;
        return *this;
    }
    Writer& value(double v) {
        separate();
        if (std::isfinite(v)) {
            out_ += format_double(v);
        } else {
            out_ += "null";
        }
        return *this;
    }
    Writer& value(std::int64_t v) {
        separate();
        out_ += std::to_string(v);
        return *this;
    }
    Writer& value(std::uint64_t v) {
        separate();
        out_ += std::to_string(v);
        return *this;
    }
    Writer& value(int v) { return value(static_cast<std::int64_t>(v)); }
    Writer& value(bool v) {
        separate();
        out_ += v ? "true" : "false";
        return *this;
    }
    Writer& value(std::string_view v) {
        separate();
        append_string(v);
        return *this;
    }
    Writer& value(const char* v) { return value(std::string_view(v)); }
    Writer& null() {
        separate();
        out_ += "null";
        return *this;
    }

    const std::string& str() const { return out_; }

  private:
    void separate() {
        if (pending_value_) {
            pending_value_ = false;
            return;
        }
        if (!stack_.empty()) {
            if (!stack_.back()) out_ += ',';
            stack_.back() = false;
        }
    }

    void append_string(std::string_view s) {
        out_ += '"';
        for (char c : s) {
            switch (c) {
                case '"': out_ += "\\\""; break;
                case '\\': out_ += "\\\\"; break;
                case '\n': out_ += "\\n"; break;
                case '\t': out_ += "\\t"; break;
                case '\r': out_ += "\\r"; break;
                default:
                    if (static_cast<unsigned char>(c) < 0x20) {
                        char buf[8];
                        std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                        out_ += buf;
                    } else {
                        out_ += c;
                    }
            }
        }
        out_ += '"';
    }

    std::string out_;
    std::vector<bool> stack_;  // true = container is still empty
    bool pending_value_ = false;
};

}  // namespace json

/// `step,observable_label,outcome` rows, 1-based steps.
inline void write_trace_csv(const OutcomeTrace& trace, std::ostream& os) {
    os << "step,observable_label,outcome\n";
    for (std::size_t i = 0; i < trace.outcomes.size(); ++i) {
        const auto step = static_cast<std::int64_t>(i) + 1;
        os << step << ',' << trace.schedule.label(trace.schedule.slot_of_step(step)) << ','
           << format_double(trace.outcomes[i]) << '\n';
    }
}

/// {"inner_product_hat", "angle_hat", "standard_error", "n_pairs", "seed"}.
inline std::string estimate_json(const GeometryEstimate& est, Seed seed) {
    json::Writer w;
    w.begin_object();
    w.key("inner_product_hat").value(est.inner_product_hat);
    w.key("angle_hat").value(est.angle_hat);
    w.key("standard_error").value(est.standard_error);
    w.key("n_pairs").value(static_cast<std::int64_t>(est.n_pairs));
    w.key("seed").value(static_cast<std::uint64_t>(seed.value));
    w.end_object();
    return w.str();
}

}  // namespace qtc
