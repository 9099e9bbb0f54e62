#pragma once

#include <stdexcept>
#include <string>

namespace drg {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Precondition violations on graph inputs (disconnected, not bipartite, ...).
class GraphError : public Error {
 public:
  using Error::Error;
};

/// Malformed or inconsistent intersection arrays.
class ArrayError : public Error {
 public:
  using Error::Error;
};

class GeometryError : public Error {
 public:
  using Error::Error;
};

class CatalogError : public Error {
 public:
  using Error::Error;
};

class CodeError : public Error {
 public:
  using Error::Error;
};

}  // namespace drg
