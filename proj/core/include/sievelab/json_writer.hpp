#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sievelab {

/// Minimal JSON emitter with deterministic output: the caller supplies keys
/// in sorted order, floats print with 10 significant digits ("%.10g"), and
/// identical inputs always produce byte-identical text.
class JsonWriter {
public:
    JsonWriter& begin_object();
    JsonWriter& end_object();
    JsonWriter& begin_array();
    JsonWriter& end_array();

    JsonWriter& key(const std::string& k);
    JsonWriter& value(const std::string& v);
    JsonWriter& value(const char* v);
    JsonWriter& value(double v);
    JsonWriter& value(uint64_t v);
    JsonWriter& value(int64_t v);
    JsonWriter& value(int v) { return value(static_cast<int64_t>(v)); }
    JsonWriter& value(bool v);

    std::string str() const { return out_; }

    static std::string escape(const std::string& s);
    static std::string format_double(double v);

private:
    void comma_if_needed();

    std::string out_;
    std::vector<bool> needs_comma_; // one level per open container
    bool after_key_ = false;
};

} // namespace sievelab
