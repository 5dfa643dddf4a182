class S69 extends Abstract10 {
  public void enter() {
    log("note");
  }
  void exit() {
    send("msg9");
  }
  public void handle() {
    send("msg8");
  }
  void tick() {
    send("msg15");
  }
  void reset() {
    send("msg12");
    switch (event) {
      case EV2072:
        log("note");
        break;
      case EV2073:
        send("msg4");
        switch (event) {
          case EV2074:
            if (x0 > 0) {
              send("msg8");
              log("note");
              new S100();
            } else {
              new S78();
              send("msg19");
            }
            switch (event) {
              case EV2075:
                send("msg10");
                new State();
                send("msg13");
                new S68();
                break;
            }
            new Helper();
            break;
          case EV2076:
            new S92();
            break;
        }
        break;
      case EV2077:
        try {
          new S64();
          try {
            new S100();
            new S61();
            send("msg11");
            new S82();
          } catch (IOException e) {
            new S21();
            send("msg4");
          } catch (IOException e) {
            new S47();
            new S14();
          }
          new S50();
          try {
            new S3();
            new S33();
          } finally {
            log("note");
            new S9();
            new S83();
            send("msg8");
          }
        } catch (IOException e) {
          new S87();
          switch (event) {
            case EV2078:
              send("msg11");
              break;
            case EV2079:
              log("note");
              break;
          }
          new S66();
          switch (event) {
            case EV2080:
              new S91();
              new S12();
              new S47();
              break;
            case EV2081:
              new S91();
              new S91();
              send("msg10");
              new S2();
              break;
          }
        } finally {
          switch (event) {
            case EV2082:
              send("msg13");
              new S9();
              new S24();
              send("msg0");
              break;
          }
        }
        if (x7 > 0) {
          send("msg6");
        } else {
          send("msg16");
          send("msg13");
          new S40();
          send("msg13");
        }
        switch (event) {
          case EV2083:
            new S44();
            new S17();
            switch (event) {
              case EV2084:
                new S100();
                new S34();
                new S77();
                break;
              case EV2085:
                new S65();
                send("msg14");
                new S3();
                send("msg5");
                break;
              case EV2086:
                send("msg12");
                log("note");
                break;
            }
            new S28();
            break;
        }
        log("note");
        break;
    }
    new S6();
  }
  public void open() {
    switch (event) {
      case EV2087:
        new Helper();
        send("msg11");
        break;
      case EV2088:
        if (x1 > 0) {
          send("msg11");
          new S87();
          new S8();
        }
        new S12();
        send("msg2");
        break;
    }
    send("msg18");
    if (x0 > 0) {
      send("msg5");
      if (x3 > 0) {
        new S44();
        new S44();
      }
      if (x9 > 0) {
        send("msg12");
        send("msg16");
      }
      if (x1 > 0) {
        if (x8 > 0) {
          new S15();
          send("msg19");
          new S19();
        } else {
          send("msg16");
          send("msg1");
        }
        new S95();
        switch (event) {
          case EV2089:
            new S67();
            break;
          case EV2090:
            send("msg6");
            new Helper();
            new S84();
            break;
          case EV2091:
            new S37();
            new S32();
            new S67();
            break;
        }
        send("msg8");
      } else {
        send("msg19");
        switch (event) {
          case EV2092:
            new S27();
            new S80();
            new S75();
            new S88();
            break;
        }
        switch (event) {
          case EV2093:
            send("msg10");
            new S65();
            break;
          case EV2094:
            new S18();
            break;
          case EV2095:
            send("msg7");
            send("msg2");
            break;
        }
      }
    }
    switch (event) {
      case EV2096:
        try {
          send("msg7");
        } finally {
          send("msg1");
          send("msg17");
          new S48();
          new S33();
        }
        new S64();
        new S13();
        send("msg11");
        break;
      case EV2097:
        new S14();
        new S42();
        send("msg3");
        new S60();
        break;
      case EV2098:
        if (x6 > 0) {
          new S36();
          send("msg16");
        } else {
          try {
            log("note");
            new S23();
            new State();
          } catch (TimeoutException e) {
            new S48();
          }
          send("msg18");
          try {
            new S61();
          } finally {
            new S10();
            new S40();
            new State();
            send("msg14");
          }
          new State();
        }
        break;
    }
  }
  void close() {
    switch (event) {
      case EV2099:
        new S65();
        break;
    }
  }
  void start() {
    switch (event) {
      case EV2100:
        send("msg3");
        switch (event) {
          case EV2101:
            log("note");
            try {
              send("msg9");
            } catch (IOException e) {
              new S23();
              new S68();
              send("msg15");
            } finally {
              new S77();
              new S86();
            }
            if (x5 > 0) {
              new S74();
              send("msg17");
              log("note");
            } else {
              new S15();
              new S37();
              send("msg11");
            }
            new S41();
            break;
          case EV2102:
            if (x7 > 0) {
              new S48();
              new S64();
              new S10();
            }
            try {
              new S79();
              new S94();
              new S71();
              new S22();
            } catch (TimeoutException e) {
              new S81();
              new State();
              new S63();
              log("note");
            } finally {
              new S6();
            }
            break;
          case EV2103:
            try {
              new S96();
              send("msg18");
            } finally {
              send("msg9");
              new S12();
            }
            break;
        }
        break;
      case EV2104:
        send("msg17");
        new S65();
        break;
    }
    new S1();
  }
  void stop() {
    new S12();
    send("msg13");
    switch (event) {
      case EV2105:
        send("msg17");
        new S70();
        break;
      case EV2106:
        new S51();
        new S35();
        if (x3 > 0) {
          new S11();
          try {
            new S71();
            log("note");
          } finally {
            new State();
            log("note");
          }
          new S35();
        }
        break;
      case EV2107:
        switch (event) {
          case EV2108:
            send("msg4");
            log("note");
            break;
        }
        log("note");
        break;
    }
  }
  void pause() {
    new S94();
    if (x3 > 0) {
      try {
        new S71();
        send("msg14");
        new S28();
        if (x4 > 0) {
          send("msg7");
          new S16();
          send("msg2");
        } else {
          new S38();
          new S4();
          send("msg8");
        }
      } catch (IOException e) {
        new S69();
        switch (event) {
          case EV2109:
            new S93();
            new S90();
            break;
          case EV2110:
            send("msg7");
            new S51();
            new S20();
            new S66();
            break;
          case EV2111:
            send("msg16");
            send("msg1");
            new S57();
            break;
        }
      } finally {
        new S68();
        log("note");
        switch (event) {
          case EV2112:
            send("msg17");
            send("msg4");
            new S7();
            break;
          case EV2113:
            send("msg17");
            send("msg9");
            break;
        }
      }
      log("note");
    } else {
      log("note");
      log("note");
      send("msg9");
    }
    send("msg4");
    switch (event) {
      case EV2114:
        switch (event) {
          case EV2115:
            if (x9 > 0) {
              send("msg3");
              send("msg1");
            }
            send("msg18");
            send("msg16");
            break;
        }
        new S92();
        send("msg18");
        break;
      case EV2116:
        try {
          new S17();
          new S97();
          new S41();
          new S29();
        } catch (TimeoutException e) {
          if (x7 > 0) {
            new S90();
          } else {
            send("msg8");
          }
        } finally {
          log("note");
        }
        break;
      case EV2117:
        send("msg14");
        break;
    }
  }
}
