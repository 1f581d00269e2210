#include "hagakit/json_writer.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace hagakit {

std::string JsonWriter::format_number(double v) {
    if (!std::isfinite(v)) {
        throw std::invalid_argument("JsonWriter: numbers must be finite");
    }
    if (v == 0.0) v = 0.0;  // normalize -0
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void JsonWriter::prefix() {
    if (pending_key_) {
        pending_key_ = false;
        return;
    }
    if (!has_item_.empty()) {
        if (has_item_.back()) out_ += ',';
        has_item_.back() = true;
    }
}

JsonWriter& JsonWriter::begin_object() {
    prefix();
    out_ += '{';
    has_item_.push_back(false);
    return *this;
}

JsonWriter& JsonWriter::end_object() {
    has_item_.pop_back();
    out_ += '}';
    return *this;
}

JsonWriter& JsonWriter::begin_array() {
    prefix();
    out_ += '[';
    has_item_.push_back(false);
    return *this;
}

JsonWriter& JsonWriter::end_array() {
    has_item_.pop_back();
    out_ += ']';
    return *this;
}

JsonWriter& JsonWriter::key(const std::string& name) {
    prefix();
    out_ += '"';
    out_ += name;  // keys are plain identifiers, no escaping needed
    out_ += "\":";
    pending_key_ = true;
    return *this;
}

JsonWriter& JsonWriter::value(double v) {
    prefix();
    out_ += format_number(v);
    return *this;
}

JsonWriter& JsonWriter::value(int v) { return value(static_cast<long long>(v)); }

JsonWriter& JsonWriter::value(long long v) {
    prefix();
    out_ += std::to_string(v);
    return *this;
}

JsonWriter& JsonWriter::value(bool v) {
    prefix();
    out_ += v ? "true" : "false";
    return *this;
}

JsonWriter& JsonWriter::value(const char* v) { return value(std::string(v)); }

JsonWriter& JsonWriter::value(const std::string& v) {
    prefix();
    out_ += '"';
    for (char ch : v) {
        switch (ch) {
            case '"': out_ += "\\\""; break;
            case '\\': out_ += "\\\\"; break;
            case '\n': out_ += "\\n"; break;
            case '\t': out_ += "\\t"; break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", ch);
                    out_ += buf;
                } else {
                    out_ += ch;
                }
        }
    }
    out_ += '"';
    return *this;
}

JsonWriter& JsonWriter::null() {
    prefix();
    out_ += "null";
    return *this;
}

JsonWriter& JsonWriter::field(const std::string& name, double v) {
    return key(name).value(v);
}
JsonWriter& JsonWriter::field(const std::string& name, int v) {
    return key(name).value(v);
}
JsonWriter& JsonWriter::field(const std::string& name, bool v) {
    return key(name).value(v);
}
JsonWriter& JsonWriter::field(const std::string& name, const std::string& v) {
    return key(name).value(v);
}

}  // namespace hagakit
