#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace epikit {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class SyntaxError : public Error {
public:
  SyntaxError(std::size_t position, std::string expected, const std::string& found)
      : Error("syntax error at position " + std::to_string(position) + ": expected " +
              expected + ", found " + found),
        position(position),
        expected(std::move(expected)) {}

  std::size_t position;
  std::string expected;
};

class UnknownIdentifier : public Error {
public:
  UnknownIdentifier(std::string name, std::string kind)
      : Error("unknown " + kind + " '" + name + "'"), name(std::move(name)), kind(std::move(kind)) {}

  std::string name;
  std::string kind;
};

// A formula lies outside the language fragment an operation accepts.
class UnsupportedFragment : public Error {
public:
  using Error::Error;
};

// A formula cannot be evaluated against the kind of model bound to the context.
class FragmentMismatch : public Error {
public:
  using Error::Error;
};

class EmptyModel : public Error {
public:
  using Error::Error;
};

class UnknownWorld : public Error {
public:
  explicit UnknownWorld(std::string world)
      : Error("unknown world '" + world + "'"), world(std::move(world)) {}

  std::string world;
};

class UnknownAction : public Error {
public:
  explicit UnknownAction(std::string action)
      : Error("unknown action '" + action + "'"), action(std::move(action)) {}

  std::string action;
};

class EmptyRestriction : public Error {
public:
  using Error::Error;
};

class EmptyActionSet : public Error {
public:
  using Error::Error;
};

class EmptyProduct : public Error {
public:
  using Error::Error;
};

class NameCollision : public Error {
public:
  explicit NameCollision(std::string name)
      : Error("name collision on '" + name + "'"), name(std::move(name)) {}

  std::string name;
};

// Condition (C1) breach: two indistinguishable worlds with different action partitions.
class C1Violation : public Error {
public:
  C1Violation(std::string agent, std::string world_a, std::string world_b)
      : Error("C1 violation for agent '" + agent + "': worlds '" + world_a + "' and '" +
              world_b + "' are indistinguishable but carry different action partitions"),
        agent(std::move(agent)),
        world_a(std::move(world_a)),
        world_b(std::move(world_b)) {}

  std::string agent;
  std::string world_a;
  std::string world_b;
};

class UnboundActionModel : public Error {
public:
  explicit UnboundActionModel(std::string name)
      : Error("no action model named '" + name + "' is bound"), name(std::move(name)) {}

  std::string name;
};

class MissingBinding : public Error {
public:
  explicit MissingBinding(std::string metavariable)
      : Error("missing binding for metavariable '" + metavariable + "'"),
        metavariable(std::move(metavariable)) {}

  std::string metavariable;
};

class ParseError : public Error {
public:
  ParseError(int line, int column, const std::string& detail)
      : Error("parse error at line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + detail),
        line(line),
        column(column) {}

  int line;
  int column;
};

class ValidationError : public Error {
public:
  using Error::Error;
};

class IoError : public Error {
public:
  using Error::Error;
};

class InvalidArgument : public Error {
public:
  using Error::Error;
};

}  // namespace epikit
