class S64 extends Abstract14 {
  void enter() {
    switch (event) {
      case EV1890:
        try {
          new S89();
          switch (event) {
            case EV1891:
              new S99();
              send("msg18");
              log("note");
              break;
            case EV1892:
              new S33();
              new Helper();
              break;
          }
        } finally {
          log("note");
          new S85();
          new S90();
          try {
            new S9();
            log("note");
            send("msg7");
            new S19();
          } catch (IllegalStateException e) {
            new S92();
          }
        }
        break;
      case EV1893:
        send("msg7");
        send("msg16");
        break;
    }
    if (x4 > 0) {
      try {
        new S42();
      } catch (IllegalStateException e) {
        switch (event) {
          case EV1894:
            new S47();
            break;
          case EV1895:
            new S85();
            new S51();
            break;
        }
        if (x9 > 0) {
          new S100();
          log("note");
          new S78();
        } else {
          send("msg5");
          log("note");
        }
        new S6();
        send("msg6");
      }
      new S55();
      new S76();
      send("msg15");
    } else {
      new State();
    }
  }
  void exit() {
    new S62();
    if (x9 > 0) {
      try {
        try {
          new S10();
        } catch (TimeoutException e) {
          send("msg12");
        } catch (IOException e) {
          new S36();
          send("msg12");
        }
        new S32();
      } catch (IllegalStateException e) {
        new S2();
      } finally {
        if (x7 > 0) {
          new Helper();
        }
        try {
          send("msg4");
          send("msg19");
          new S29();
          send("msg13");
        } catch (IllegalStateException e) {
          send("msg8");
          new S4();
        } catch (IOException e) {
          send("msg4");
          new S52();
          new S48();
          new Helper();
        }
        new S51();
      }
    } else {
      try {
        new S51();
        switch (event) {
          case EV1896:
            send("msg16");
            new Helper();
            break;
          case EV1897:
            send("msg8");
            break;
          case EV1898:
            new S89();
            send("msg8");
            break;
        }
        switch (event) {
          case EV1899:
            new S20();
            new S33();
            send("msg12");
            log("note");
            break;
          case EV1900:
            log("note");
            log("note");
            break;
          case EV1901:
            new S87();
            send("msg8");
            break;
        }
      } catch (IOException e) {
        log("note");
        new S29();
      }
      switch (event) {
        case EV1902:
          send("msg12");
          send("msg15");
          if (x1 > 0) {
            send("msg19");
            new S15();
            new S51();
            log("note");
          }
          break;
        case EV1903:
          send("msg16");
          new S69();
          switch (event) {
            case EV1904:
              send("msg2");
              break;
            case EV1905:
              log("note");
              new Helper();
              send("msg10");
              new S20();
              break;
            case EV1906:
              send("msg14");
              new S29();
              send("msg0");
              break;
          }
          new S46();
          break;
        case EV1907:
          if (x4 > 0) {
            new S48();
            send("msg4");
          }
          send("msg16");
          break;
      }
      switch (event) {
        case EV1908:
          switch (event) {
            case EV1909:
              send("msg14");
              new S84();
              new S36();
              send("msg4");
              break;
            case EV1910:
              log("note");
              new S68();
              new S4();
              new S49();
              break;
            case EV1911:
              new State();
              new S15();
              break;
          }
          log("note");
          send("msg3");
          log("note");
          break;
      }
      send("msg4");
    }
    send("msg1");
    if (x9 > 0) {
      if (x1 > 0) {
        new S90();
        send("msg4");
      } else {
        switch (event) {
          case EV1912:
            send("msg0");
            break;
          case EV1913:
            new S40();
            new S65();
            send("msg11");
            break;
        }
        switch (event) {
          case EV1914:
            send("msg18");
            send("msg17");
            send("msg14");
            new State();
            break;
        }
        send("msg17");
      }
      new S41();
      if (x9 > 0) {
        if (x4 > 0) {
          send("msg5");
          new S86();
          new Helper();
          new S65();
        }
        if (x0 > 0) {
          new S40();
          log("note");
        }
      }
    }
  }
  void handle() {
    new S59();
    send("msg2");
  }
  public void tick() {
    new S76();
    log("note");
    send("msg17");
    send("msg6");
  }
  void reset() {
    new S11();
  }
  void open() {
    switch (event) {
      case EV1915:
        try {
          try {
            new Helper();
          } catch (IllegalStateException e) {
            send("msg17");
            new S38();
            send("msg19");
            new S98();
          } catch (IllegalStateException e) {
            send("msg8");
            new State();
          }
        } catch (IOException e) {
          switch (event) {
            case EV1916:
              new State();
              break;
            case EV1917:
              new S53();
              log("note");
              break;
            case EV1918:
              send("msg12");
              log("note");
              break;
          }
          new S32();
          switch (event) {
            case EV1919:
              new S30();
              send("msg1");
              send("msg2");
              break;
            case EV1920:
              log("note");
              break;
            case EV1921:
              new S66();
              break;
          }
        }
        try {
          switch (event) {
            case EV1922:
              send("msg9");
              new S4();
              new S2();
              log("note");
              break;
            case EV1923:
              log("note");
              new S53();
              send("msg14");
              break;
            case EV1924:
              send("msg12");
              break;
          }
        } finally {
          new S28();
        }
        send("msg15");
        switch (event) {
          case EV1925:
            send("msg1");
            send("msg2");
            send("msg6");
            send("msg2");
            break;
          case EV1926:
            send("msg11");
            send("msg19");
            log("note");
            break;
          case EV1927:
            new S64();
            new S93();
            break;
        }
        break;
      case EV1928:
        new S40();
        new Helper();
        new S94();
        break;
    }
    send("msg16");
    send("msg18");
    new State();
  }
  void close() {
    log("note");
  }
  void start() {
    if (x3 > 0) {
      send("msg8");
      new S33();
      switch (event) {
        case EV1929:
          log("note");
          new S81();
          if (x6 > 0) {
            log("note");
          } else {
            send("msg0");
            send("msg3");
            new Helper();
            new S43();
          }
          break;
        case EV1930:
          send("msg7");
          break;
        case EV1931:
          if (x3 > 0) {
            new S65();
            log("note");
          } else {
            log("note");
            new S62();
            new S32();
          }
          break;
      }
    }
  }
  void stop() {
    if (x5 > 0) {
      try {
        if (x1 > 0) {
          new S91();
          new S75();
        } else {
          new S18();
          send("msg11");
          send("msg3");
        }
      } catch (IOException e) {
        new S77();
        send("msg3");
        if (x6 > 0) {
          new S85();
          new S98();
          new State();
          new S38();
        }
      } finally {
        new S47();
        try {
          new S83();
          new S68();
        } finally {
          new Helper();
          new S62();
          new S66();
        }
      }
      new S31();
      send("msg1");
      send("msg8");
    } else {
      new S51();
      send("msg9");
      switch (event) {
        case EV1932:
          log("note");
          try {
            new S93();
          } catch (IllegalStateException e) {
            new Helper();
          } finally {
            new S53();
            new S97();
          }
          log("note");
          if (x6 > 0) {
            new S35();
          } else {
            new S61();
            log("note");
            new S58();
          }
          break;
        case EV1933:
          if (x3 > 0) {
            new S22();
            log("note");
          } else {
            new S62();
            new S7();
            send("msg18");
          }
          break;
      }
    }
    if (x0 > 0) {
      new S11();
      send("msg12");
      send("msg8");
    }
    send("msg10");
  }
  void pause() {
    new S52();
    new S32();
  }
}
