//---------------------------------------------------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file dimerdiff/errors.hpp
//---------------------------------------------------------------------------//
#pragma once

#include <stdexcept>
#include <string>

namespace dimerdiff
{
//! Base class for all library errors
class Error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

//! Argument outside the domain where an operation is defined
class DomainError : public Error
{
  public:
    using Error::Error;
};

//! Eigenvalue search did not converge
class SolverFailure : public Error
{
  public:
    SolverFailure(int l, double lower, double upper, std::string const& why);

    int l() const { return l_; }
    double lower_energy() const { return lower_; }
    double upper_energy() const { return upper_; }

  private:
    int l_;
    double lower_;
    double upper_;
};

//! Requested rotational state is not bound
class UnknownState : public Error
{
  public:
    explicit UnknownState(int l);
    int l() const { return l_; }

  private:
    int l_;
};

//! Transition energy exceeds the centre-of-mass kinetic energy
class ClosedChannel : public Error
{
  public:
    using Error::Error;
};

//! Diffraction order does not propagate (|sin theta_n| > 1)
class EvanescentOrder : public Error
{
  public:
    using Error::Error;
};

//! Malformed or inconsistent run configuration
class ConfigError : public Error
{
  public:
    using Error::Error;
};

}  // namespace dimerdiff
