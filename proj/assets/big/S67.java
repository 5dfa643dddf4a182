class S67 extends Abstract10 {
  public void enter() {
    switch (event) {
      case EV2030:
        send("msg12");
        new S49();
        break;
      case EV2031:
        send("msg6");
        send("msg17");
        break;
    }
    new S44();
    send("msg19");
  }
  void exit() {
    log("note");
    log("note");
    send("msg10");
    if (x0 > 0) {
      send("msg3");
      log("note");
    } else {
      switch (event) {
        case EV2032:
          new S79();
          if (x3 > 0) {
            new S35();
            new S10();
            new S78();
            log("note");
          }
          new S20();
          break;
        case EV2033:
          send("msg4");
          send("msg4");
          new S9();
          break;
        case EV2034:
          try {
            new S84();
          } catch (IllegalStateException e) {
            send("msg10");
            send("msg16");
            send("msg15");
            log("note");
          } catch (IOException e) {
            new S19();
            new S80();
            send("msg8");
            send("msg1");
          }
          send("msg7");
          break;
      }
    }
  }
  void handle() {
    new S74();
    switch (event) {
      case EV2035:
        new S14();
        switch (event) {
          case EV2036:
            new S35();
            new S47();
            try {
              send("msg11");
              new S90();
              new S2();
            } catch (IOException e) {
              send("msg13");
            } finally {
              new S28();
            }
            send("msg4");
            break;
        }
        new S3();
        break;
      case EV2037:
        send("msg2");
        try {
          new S45();
          send("msg0");
        } catch (IOException e) {
          new S58();
        }
        break;
      case EV2038:
        new S38();
        new S54();
        try {
          send("msg10");
          send("msg11");
          new S1();
          try {
            new S37();
            log("note");
            new S85();
            send("msg14");
          } catch (IOException e) {
            new State();
            new S88();
            new S37();
          }
        } catch (IOException e) {
          try {
            new S47();
          } catch (IOException e) {
            new S17();
          }
          switch (event) {
            case EV2039:
              send("msg11");
              new S18();
              break;
          }
          try {
            send("msg9");
            new Helper();
            log("note");
          } catch (TimeoutException e) {
            new S97();
            new S73();
          }
        } finally {
          send("msg3");
          switch (event) {
            case EV2040:
              send("msg7");
              send("msg0");
              log("note");
              break;
            case EV2041:
              new S84();
              new S29();
              new S46();
              break;
            case EV2042:
              new S72();
              break;
          }
          log("note");
        }
        break;
    }
    if (x0 > 0) {
      new S97();
      send("msg5");
      try {
        new S37();
      } finally {
        send("msg10");
        new S50();
        send("msg9");
        try {
          send("msg15");
        } catch (TimeoutException e) {
          log("note");
        } catch (IllegalStateException e) {
          log("note");
        }
      }
    }
  }
  void tick() {
    new S100();
    new S82();
    send("msg3");
    send("msg9");
  }
  void reset() {
    send("msg2");
    switch (event) {
      case EV2043:
        new S81();
        try {
          send("msg0");
          send("msg0");
        } catch (IllegalStateException e) {
          new S8();
          new State();
        } catch (IOException e) {
          send("msg7");
          send("msg13");
          try {
            new S9();
            send("msg17");
            log("note");
            send("msg17");
          } catch (IllegalStateException e) {
            log("note");
            new S35();
          }
        }
        break;
      case EV2044:
        send("msg1");
        try {
          new S23();
        } catch (TimeoutException e) {
          switch (event) {
            case EV2045:
              new S53();
              new S70();
              send("msg17");
              new S39();
              break;
            case EV2046:
              log("note");
              log("note");
              break;
            case EV2047:
              send("msg17");
              new S87();
              new S2();
              break;
          }
          new S35();
          send("msg3");
        } finally {
          new S14();
        }
        if (x7 > 0) {
          new S28();
          if (x6 > 0) {
            new Helper();
          } else {
            send("msg4");
            send("msg15");
          }
          switch (event) {
            case EV2048:
              log("note");
              break;
            case EV2049:
              send("msg5");
              new S77();
              new State();
              send("msg15");
              break;
          }
          switch (event) {
            case EV2050:
              new S18();
              new S69();
              new S79();
              break;
          }
        }
        break;
      case EV2051:
        new S41();
        if (x0 > 0) {
          send("msg4");
          send("msg15");
        } else {
          send("msg0");
          send("msg1");
          send("msg1");
          new S67();
        }
        switch (event) {
          case EV2052:
            send("msg19");
            try {
              log("note");
              new S2();
              new S37();
            } catch (TimeoutException e) {
              new S95();
              new S22();
            } finally {
              log("note");
              new S97();
              new S57();
            }
            switch (event) {
              case EV2053:
                new S70();
                new S26();
                new S4();
                break;
            }
            break;
          case EV2054:
            new S92();
            new S20();
            break;
          case EV2055:
            new S59();
            new S10();
            break;
        }
        new S17();
        break;
    }
    send("msg19");
    if (x5 > 0) {
      new S52();
      new S65();
    }
  }
  public void open() {
    send("msg13");
    switch (event) {
      case EV2056:
        new S35();
        switch (event) {
          case EV2057:
            new S76();
            new S89();
            send("msg19");
            break;
        }
        if (x4 > 0) {
          new S10();
          try {
            new S100();
            send("msg19");
            new S6();
            new S79();
          } catch (TimeoutException e) {
            send("msg8");
          }
          new S30();
        } else {
          new S93();
          send("msg10");
          switch (event) {
            case EV2058:
              send("msg3");
              break;
            case EV2059:
              send("msg0");
              send("msg1");
              break;
            case EV2060:
              new S4();
              new S48();
              send("msg15");
              new S75();
              break;
          }
          try {
            new S40();
          } catch (IllegalStateException e) {
            new S65();
          } catch (IOException e) {
            new S77();
          }
        }
        break;
    }
  }
  public void close() {
    send("msg15");
    new S43();
    if (x5 > 0) {
      if (x6 > 0) {
        send("msg2");
        new S15();
      } else {
        try {
          send("msg9");
          new S34();
        } catch (TimeoutException e) {
          send("msg4");
          log("note");
          send("msg5");
        } finally {
          new S86();
        }
        new S98();
        send("msg8");
        switch (event) {
          case EV2061:
            send("msg3");
            new State();
            new S46();
            send("msg2");
            break;
          case EV2062:
            send("msg11");
            break;
        }
      }
      if (x5 > 0) {
        new S21();
        send("msg14");
        new S86();
        switch (event) {
          case EV2063:
            new S57();
            log("note");
            break;
          case EV2064:
            new S63();
            new S9();
            new S79();
            new S13();
            break;
        }
      }
      new S76();
    } else {
      send("msg7");
      new Helper();
      try {
        new S83();
      } finally {
        try {
          log("note");
          send("msg14");
          new S23();
          new S96();
        } catch (IllegalStateException e) {
          new S52();
          send("msg15");
          new Helper();
          send("msg10");
        }
        new S79();
        try {
          new S23();
          new S63();
          send("msg15");
          new S16();
        } finally {
          new S8();
          send("msg9");
          new S62();
        }
      }
    }
  }
  void start() {
    send("msg2");
    send("msg15");
  }
  void stop() {
    if (x0 > 0) {
      if (x5 > 0) {
        switch (event) {
          case EV2065:
            send("msg13");
            send("msg1");
            break;
        }
        new S79();
      }
      new S53();
    } else {
      send("msg5");
      try {
        new State();
      } catch (IOException e) {
        new S70();
        new S98();
        new S34();
      }
      send("msg17");
    }
    send("msg10");
  }
  void pause() {
    new S78();
  }
}
