class S65 extends Abstract19 {
  public void enter() {
    log("note");
    try {
      new S97();
      switch (event) {
        case EV1934:
          new S31();
          switch (event) {
            case EV1935:
              new State();
              break;
            case EV1936:
              new S40();
              break;
          }
          break;
        case EV1937:
          new State();
          send("msg5");
          switch (event) {
            case EV1938:
              send("msg0");
              new S68();
              new S68();
              break;
            case EV1939:
              log("note");
              new S54();
              new S28();
              send("msg14");
              break;
            case EV1940:
              new S93();
              new S98();
              break;
          }
          try {
            new S1();
            new S56();
          } catch (TimeoutException e) {
            new S20();
            log("note");
            send("msg13");
            new S29();
          }
          break;
      }
    } finally {
      send("msg19");
      send("msg15");
      send("msg17");
    }
    new S73();
    new S47();
  }
  public void exit() {
    try {
      send("msg4");
      if (x4 > 0) {
        switch (event) {
          case EV1941:
            new S45();
            send("msg17");
            break;
        }
        if (x4 > 0) {
          send("msg14");
          log("note");
          new S5();
        } else {
          send("msg16");
        }
        if (x6 > 0) {
          new State();
          new Helper();
        } else {
          new S28();
          log("note");
        }
        new S72();
      }
    } catch (TimeoutException e) {
      new S37();
      log("note");
      new S31();
    } catch (IllegalStateException e) {
      log("note");
      new S80();
      send("msg8");
    }
    switch (event) {
      case EV1942:
        log("note");
        if (x4 > 0) {
          if (x2 > 0) {
            new S30();
            send("msg8");
          }
          if (x9 > 0) {
            send("msg4");
            log("note");
            new S23();
            log("note");
          } else {
            new S44();
            send("msg6");
            new S30();
          }
          log("note");
          new S2();
        }
        new S9();
        new S65();
        break;
      case EV1943:
        send("msg10");
        break;
    }
    if (x6 > 0) {
      new Helper();
      switch (event) {
        case EV1944:
          send("msg7");
          send("msg0");
          break;
      }
      new S91();
      switch (event) {
        case EV1945:
          new S63();
          send("msg3");
          new S51();
          break;
      }
    }
    try {
      switch (event) {
        case EV1946:
          send("msg19");
          break;
        case EV1947:
          switch (event) {
            case EV1948:
              new S43();
              new S7();
              break;
            case EV1949:
              log("note");
              break;
            case EV1950:
              send("msg9");
              new Helper();
              break;
          }
          switch (event) {
            case EV1951:
              send("msg3");
              send("msg15");
              break;
            case EV1952:
              log("note");
              new State();
              break;
            case EV1953:
              new S99();
              new S26();
              break;
          }
          send("msg10");
          break;
      }
      send("msg17");
      switch (event) {
        case EV1954:
          if (x9 > 0) {
            new S70();
            new S97();
            send("msg3");
            send("msg6");
          } else {
            log("note");
            new S53();
            new S27();
          }
          new S50();
          switch (event) {
            case EV1955:
              new Helper();
              send("msg7");
              log("note");
              new S14();
              break;
            case EV1956:
              send("msg4");
              new S22();
              send("msg3");
              break;
            case EV1957:
              send("msg0");
              send("msg12");
              send("msg10");
              new S82();
              break;
          }
          break;
        case EV1958:
          send("msg15");
          new S77();
          log("note");
          break;
      }
      send("msg19");
    } finally {
      switch (event) {
        case EV1959:
          new S24();
          new S41();
          new S41();
          try {
            send("msg5");
          } catch (TimeoutException e) {
            new S29();
            log("note");
            new S32();
            send("msg17");
          }
          break;
        case EV1960:
          new S38();
          new S44();
          try {
            new S16();
            new S35();
          } finally {
            new S44();
            new Helper();
          }
          break;
        case EV1961:
          send("msg18");
          new S24();
          new S9();
          break;
      }
      log("note");
      new S56();
    }
  }
  void handle() {
    try {
      new S98();
      send("msg13");
      new S82();
    } catch (IOException e) {
      send("msg7");
      send("msg5");
      new S60();
    } catch (TimeoutException e) {
      try {
        send("msg7");
      } catch (IllegalStateException e) {
        log("note");
      }
      new S2();
      new S21();
      new S74();
    }
    send("msg4");
    new State();
  }
  void tick() {
    if (x6 > 0) {
      new S44();
      new S16();
      try {
        new S60();
        switch (event) {
          case EV1962:
            send("msg1");
            send("msg7");
            new S56();
            new S87();
            break;
          case EV1963:
            send("msg18");
            new S42();
            new S32();
            send("msg0");
            break;
        }
      } catch (TimeoutException e) {
        log("note");
        send("msg14");
        send("msg12");
        new S29();
      } finally {
        try {
          new S51();
          send("msg17");
        } catch (TimeoutException e) {
          send("msg13");
          new S37();
          new S40();
          new S96();
        }
        new S44();
        new S61();
      }
      if (x3 > 0) {
        try {
          new S46();
          new S82();
          send("msg8");
          send("msg4");
        } catch (IllegalStateException e) {
          log("note");
          send("msg18");
          new S7();
          new Helper();
        }
        send("msg10");
        send("msg7");
        new S70();
      }
    }
    new Helper();
  }
  public void reset() {
    if (x1 > 0) {
      new S63();
      try {
        send("msg4");
        log("note");
        if (x7 > 0) {
          log("note");
        } else {
          new S77();
          send("msg14");
          new S36();
          log("note");
        }
        try {
          new S71();
          log("note");
          send("msg12");
        } catch (IOException e) {
          new S21();
          send("msg4");
        }
      } finally {
        new S9();
        switch (event) {
          case EV1964:
            send("msg9");
            send("msg14");
            new S88();
            log("note");
            break;
          case EV1965:
            send("msg8");
            break;
        }
        new S89();
        send("msg16");
      }
      send("msg0");
    } else {
      if (x4 > 0) {
        send("msg13");
        switch (event) {
          case EV1966:
            new S10();
            break;
        }
        send("msg12");
      }
    }
    send("msg5");
    new S63();
    if (x6 > 0) {
      try {
        switch (event) {
          case EV1967:
            new S20();
            send("msg9");
            new S74();
            new S77();
            break;
        }
        send("msg0");
        try {
          send("msg6");
        } catch (TimeoutException e) {
          send("msg4");
          log("note");
          new S27();
          new S11();
        } catch (TimeoutException e) {
          new S50();
          send("msg0");
        }
      } catch (IllegalStateException e) {
        switch (event) {
          case EV1968:
            new S100();
            send("msg6");
            break;
        }
        send("msg15");
        log("note");
      }
      send("msg1");
      try {
        new S73();
        new S52();
      } catch (TimeoutException e) {
        new S78();
        try {
          new S2();
          log("note");
        } catch (IOException e) {
          send("msg0");
          send("msg16");
        } catch (IOException e) {
          send("msg10");
          new S31();
          send("msg2");
        }
        if (x9 > 0) {
          new State();
          new Helper();
        }
      } catch (TimeoutException e) {
        new S31();
      }
    } else {
      send("msg0");
      try {
        if (x0 > 0) {
          send("msg18");
          log("note");
          new S84();
        } else {
          new S46();
          send("msg8");
          send("msg1");
          new S67();
        }
        if (x9 > 0) {
          send("msg5");
          new S28();
        }
        send("msg17");
      } finally {
        send("msg9");
        new S18();
        new S60();
        switch (event) {
          case EV1969:
            new S8();
            send("msg1");
            send("msg2");
            break;
          case EV1970:
            new State();
            log("note");
            break;
        }
      }
    }
  }
  void open() {
    send("msg13");
    try {
      try {
        new S80();
      } catch (IOException e) {
        send("msg5");
        new S43();
      }
    } catch (IOException e) {
      send("msg2");
      send("msg17");
      new Helper();
    } finally {
      new S2();
      new S84();
      send("msg15");
    }
    new S49();
  }
  void close() {
    new S11();
    if (x9 > 0) {
      new S68();
      new S41();
      send("msg3");
      send("msg0");
    } else {
      try {
        send("msg1");
        if (x8 > 0) {
          new S69();
          new S100();
          send("msg6");
          new S9();
        } else {
          new S17();
          new S14();
          new S82();
          send("msg7");
        }
        new Helper();
        new S16();
      } catch (TimeoutException e) {
        if (x5 > 0) {
          send("msg16");
          new S53();
          send("msg11");
        } else {
          send("msg17");
          new S73();
        }
        new S26();
      } finally {
        new S98();
        log("note");
        if (x4 > 0) {
          send("msg16");
          new Helper();
          new S21();
          new S20();
        } else {
          send("msg17");
          send("msg1");
        }
      }
      if (x6 > 0) {
        log("note");
        send("msg10");
      }
      switch (event) {
        case EV1971:
          new S26();
          send("msg6");
          switch (event) {
            case EV1972:
              send("msg16");
              send("msg15");
              break;
            case EV1973:
              new Helper();
              send("msg7");
              break;
          }
          break;
      }
      log("note");
    }
    switch (event) {
      case EV1974:
        new Helper();
        send("msg2");
        new S47();
        break;
      case EV1975:
        if (x2 > 0) {
          new S58();
          send("msg1");
          try {
            new S55();
            send("msg14");
            new S22();
          } catch (TimeoutException e) {
            send("msg6");
          } catch (IOException e) {
            send("msg11");
          }
        }
        log("note");
        new S53();
        new S61();
        break;
    }
  }
  void start() {
    switch (event) {
      case EV1976:
        new S61();
        break;
      case EV1977:
        new S17();
        break;
      case EV1978:
        send("msg2");
        send("msg12");
        break;
    }
    try {
      try {
        if (x4 > 0) {
          log("note");
          send("msg2");
          new S40();
        }
        try {
          send("msg14");
          new S91();
        } finally {
          new S59();
          log("note");
          new S81();
        }
      } catch (IOException e) {
        send("msg16");
        new S13();
        new S86();
      } finally {
        switch (event) {
          case EV1979:
            new S94();
            send("msg11");
            break;
          case EV1980:
            new S31();
            new S10();
            send("msg10");
            send("msg12");
            break;
        }
        send("msg14");
        new S2();
      }
    } catch (IOException e) {
      if (x6 > 0) {
        new S77();
        log("note");
        new S69();
      }
      new S14();
      switch (event) {
        case EV1981:
          if (x5 > 0) {
            send("msg0");
            new S99();
          } else {
            log("note");
          }
          new S48();
          new S10();
          break;
        case EV1982:
          switch (event) {
            case EV1983:
              new S32();
              log("note");
              new S20();
              new Helper();
              break;
            case EV1984:
              new S77();
              new S29();
              new S67();
              new S24();
              break;
            case EV1985:
              send("msg17");
              send("msg9");
              break;
          }
          send("msg5");
          if (x5 > 0) {
            send("msg14");
          } else {
            new S48();
            send("msg11");
            new S68();
          }
          log("note");
          break;
        case EV1986:
          new S68();
          break;
      }
      new S95();
    }
    new S85();
    switch (event) {
      case EV1987:
        new State();
        if (x1 > 0) {
          switch (event) {
            case EV1988:
              send("msg6");
              new S82();
              send("msg9");
              new S69();
              break;
            case EV1989:
              new S40();
              log("note");
              log("note");
              send("msg3");
              break;
          }
          new S52();
          send("msg11");
          send("msg15");
        }
        break;
      case EV1990:
        send("msg10");
        new S20();
        send("msg15");
        try {
          switch (event) {
            case EV1991:
              new S53();
              new S14();
              new S48();
              break;
          }
          new S31();
          switch (event) {
            case EV1992:
              new S84();
              log("note");
              send("msg4");
              break;
            case EV1993:
              send("msg17");
              new S93();
              send("msg2");
              break;
          }
          new S85();
        } catch (TimeoutException e) {
          switch (event) {
            case EV1994:
              log("note");
              send("msg18");
              break;
            case EV1995:
              send("msg11");
              new S16();
              send("msg1");
              break;
            case EV1996:
              new S93();
              send("msg5");
              break;
          }
          if (x4 > 0) {
            send("msg19");
            new S11();
            send("msg3");
          } else {
            new S24();
            send("msg15");
            log("note");
            new S53();
          }
          new Helper();
        }
        break;
      case EV1997:
        send("msg10");
        send("msg17");
        break;
    }
  }
  public void stop() {
    send("msg5");
  }
  void pause() {
    send("msg1");
    switch (event) {
      case EV1998:
        switch (event) {
          case EV1999:
            new Helper();
            switch (event) {
              case EV2000:
                send("msg4");
                send("msg10");
                send("msg2");
                break;
            }
            if (x9 > 0) {
              new S72();
              send("msg12");
              new S34();
              new S27();
            } else {
              send("msg0");
              new S84();
            }
            send("msg16");
            break;
        }
        break;
      case EV2001:
        new S6();
        try {
          log("note");
        } catch (TimeoutException e) {
          new S92();
        }
        break;
      case EV2002:
        switch (event) {
          case EV2003:
            send("msg13");
            send("msg15");
            send("msg16");
            send("msg2");
            break;
          case EV2004:
            send("msg19");
            new S91();
            new S18();
            try {
              send("msg11");
              new S6();
            } catch (IOException e) {
              send("msg16");
              new Helper();
              new S6();
              new S27();
            } finally {
              log("note");
              log("note");
              send("msg4");
            }
            break;
        }
        send("msg10");
        break;
    }
    switch (event) {
      case EV2005:
        send("msg13");
        if (x6 > 0) {
          send("msg19");
          new S26();
          switch (event) {
            case EV2006:
              new S52();
              log("note");
              break;
          }
        } else {
          try {
            new S34();
          } catch (IOException e) {
            send("msg1");
            new S76();
          } catch (IOException e) {
            new S93();
            send("msg8");
            send("msg7");
          }
          if (x2 > 0) {
            new S55();
            new Helper();
            new S100();
          }
          if (x6 > 0) {
            send("msg17");
          } else {
            new S44();
            new S26();
          }
        }
        new S84();
        break;
      case EV2007:
        if (x8 > 0) {
          new S89();
          try {
            log("note");
            new S32();
            send("msg2");
            send("msg2");
          } catch (TimeoutException e) {
            new S5();
          } catch (IllegalStateException e) {
            send("msg8");
            send("msg1");
            log("note");
          }
        }
        log("note");
        break;
      case EV2008:
        send("msg9");
        log("note");
        break;
    }
    send("msg17");
  }
}
