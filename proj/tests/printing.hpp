#pragma once

#include <doctest.h>

#include "blocklie/io.hpp"

namespace doctest {

template <>
struct StringMaker<blocklie::LieElement> {
  static String convert(const blocklie::LieElement& e) { return blocklie::to_string(e).c_str(); }
};

template <>
struct StringMaker<blocklie::ModuleVector> {
  static String convert(const blocklie::ModuleVector& v) { return blocklie::to_string(v).c_str(); }
};

template <>
struct StringMaker<blocklie::Polynomial> {
  static String convert(const blocklie::Polynomial& p) { return p.to_string("t").c_str(); }
};

template <>
struct StringMaker<blocklie::Scalar> {
  static String convert(const blocklie::Scalar& s) { return blocklie::to_string(s).c_str(); }
};

template <>
struct StringMaker<blocklie::Rational> {
  static String convert(const blocklie::Rational& q) { return q.get_str().c_str(); }
};

}  // namespace doctest
