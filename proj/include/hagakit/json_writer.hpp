#pragma once

#include <string>
#include <vector>

namespace hagakit {

/// Minimal streaming JSON emitter. Keys keep insertion order and every number
/// is printed with 17 significant digits, so output for fixed inputs is
/// byte-identical across runs.
class JsonWriter {
public:
    JsonWriter& begin_object();
    JsonWriter& end_object();
    JsonWriter& begin_array();
    JsonWriter& end_array();

    JsonWriter& key(const std::string& name);

    JsonWriter& value(double v);
    JsonWriter& value(int v);
    JsonWriter& value(long long v);
    JsonWriter& value(bool v);
    JsonWriter& value(const char* v);
    JsonWriter& value(const std::string& v);
    JsonWriter& null();

    // key + value shorthands
    JsonWriter& field(const std::string& name, double v);
    JsonWriter& field(const std::string& name, int v);
    JsonWriter& field(const std::string& name, bool v);
    JsonWriter& field(const std::string& name, const std::string& v);

    std::string str() const { return out_; }

    static std::string format_number(double v);

private:
    void prefix();

    std::string out_;
    std::vector<bool> has_item_;  // per nesting level
    bool pending_key_ = false;
};

}  // namespace hagakit
