#include <string>

#include "doctest.h"
#include "hagakit/json_writer.hpp"

using namespace hagakit;

TEST_CASE("number formatting carries full precision") {
    CHECK(JsonWriter::format_number(1.0) == "1");
    CHECK(JsonWriter::format_number(0.5) == "0.5");
    CHECK(JsonWriter::format_number(0.1) == "0.10000000000000001");
    CHECK(JsonWriter::format_number(-0.0) == "0");
    CHECK(JsonWriter::format_number(2.0 / 3.0) == "0.66666666666666663");
    CHECK_THROWS(JsonWriter::format_number(1.0 / 0.0));
}

TEST_CASE("writer keeps key order and nests") {
    JsonWriter w;
    w.begin_object();
    w.field("b_first", 1.0);
    w.field("a_second", std::string("zerobar"));
    w.key("inner").begin_object().field("x", 0.25).field("ok", true).end_object();
    w.key("list").begin_array().value(1).value(2.5).value(false).end_array();
    w.end_object();
    CHECK(w.str() ==
          "{\"b_first\":1,\"a_second\":\"zerobar\","
          "\"inner\":{\"x\":0.25,\"ok\":true},\"list\":[1,2.5,false]}");
}

TEST_CASE("strings are escaped") {
    JsonWriter w;
    w.begin_object().field("msg", std::string("a\"b\\c\nd")).end_object();
    CHECK(w.str() == "{\"msg\":\"a\\\"b\\\\c\\nd\"}");
}

TEST_CASE("output is deterministic") {
    const auto make = [] {
        JsonWriter w;
        w.begin_object().field("v", 1.0 / 3.0).field("w", 1e-9).end_object();
        return w.str();
    };
    CHECK(make() == make());
}
