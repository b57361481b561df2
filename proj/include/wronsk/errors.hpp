#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wronsk {

/// Malformed input text; `position()` is the 0-based offset of the offending character.
class ParseError : public std::runtime_error {
public:
	ParseError(std::size_t position, const std::string &what)
	    : std::runtime_error("parse error at position " + std::to_string(position) + ": " + what),
	      position_(position), message_(what)
	{}

	std::size_t position() const noexcept { return position_; }
	/// The description without the position prefix.
	const std::string &message() const noexcept { return message_; }

private:
	std::size_t position_;
	std::string message_;
};

/// A request whose enumeration size (factorial or combinatorial) exceeds the configured cap.
class ResourceLimitError : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

/// A closed form disagreed with the direct computation. Should never fire.
class InternalInconsistencyError : public std::logic_error {
public:
	using std::logic_error::logic_error;
};

} // namespace wronsk
