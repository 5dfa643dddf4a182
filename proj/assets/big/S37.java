class S37 extends Abstract13 {
  void enter() {
    switch (event) {
      case EV1027:
        if (x7 > 0) {
          switch (event) {
            case EV1028:
              send("msg5");
              send("msg2");
              break;
            case EV1029:
              send("msg7");
              send("msg10");
              break;
            case EV1030:
              new S84();
              new S15();
              break;
          }
          if (x4 > 0) {
            send("msg2");
          } else {
            new S61();
          }
          if (x5 > 0) {
            new S58();
            new S58();
          } else {
            new S50();
            new S28();
            send("msg18");
            new S20();
          }
        }
        new S27();
        send("msg16");
        send("msg9");
        break;
    }
    switch (event) {
      case EV1031:
        try {
          try {
            new S11();
            new S76();
            new S85();
          } catch (IllegalStateException e) {
            new S63();
          }
          log("note");
          new S65();
        } finally {
          new S76();
          try {
            send("msg9");
          } catch (TimeoutException e) {
            new S86();
          }
          new S65();
        }
        break;
      case EV1032:
        log("note");
        log("note");
        switch (event) {
          case EV1033:
            new S84();
            new S23();
            new State();
            break;
          case EV1034:
            new S83();
            log("note");
            try {
              send("msg11");
            } catch (TimeoutException e) {
              send("msg6");
              log("note");
              new S30();
              new S83();
            }
            break;
          case EV1035:
            new S72();
            break;
        }
        new S65();
        break;
    }
    switch (event) {
      case EV1036:
        try {
          new S16();
          switch (event) {
            case EV1037:
              log("note");
              break;
            case EV1038:
              log("note");
              new S59();
              break;
          }
        } catch (TimeoutException e) {
          log("note");
          log("note");
        } catch (IllegalStateException e) {
          if (x8 > 0) {
            new S58();
          }
          new S94();
        }
        break;
      case EV1039:
        new S98();
        switch (event) {
          case EV1040:
            send("msg6");
            switch (event) {
              case EV1041:
                new Helper();
                new S51();
                new S92();
                send("msg1");
                break;
              case EV1042:
                send("msg7");
                send("msg17");
                break;
              case EV1043:
                new S1();
                new S7();
                break;
            }
            try {
              new S22();
            } finally {
              send("msg19");
              log("note");
            }
            new S27();
            break;
          case EV1044:
            new S90();
            new Helper();
            break;
          case EV1045:
            switch (event) {
              case EV1046:
                new S63();
                send("msg3");
                send("msg15");
                break;
            }
            new S66();
            break;
        }
        break;
      case EV1047:
        new S94();
        new S7();
        send("msg16");
        break;
    }
  }
  public void exit() {
    try {
      try {
        new S64();
        send("msg16");
        log("note");
      } catch (TimeoutException e) {
        new S65();
        try {
          new S50();
          log("note");
        } finally {
          send("msg15");
          new S12();
          new S51();
          new S41();
        }
      } finally {
        send("msg16");
      }
      if (x7 > 0) {
        new S39();
        if (x6 > 0) {
          new S92();
          new S17();
          new S45();
          new S48();
        }
      }
    } catch (IllegalStateException e) {
      new S28();
      send("msg0");
    } catch (IOException e) {
      switch (event) {
        case EV1048:
          new S78();
          break;
        case EV1049:
          switch (event) {
            case EV1050:
              send("msg10");
              new S88();
              break;
            case EV1051:
              new S92();
              break;
            case EV1052:
              send("msg18");
              send("msg16");
              send("msg17");
              break;
          }
          send("msg12");
          switch (event) {
            case EV1053:
              new S15();
              new S85();
              break;
          }
          send("msg19");
          break;
        case EV1054:
          new S70();
          new S94();
          log("note");
          if (x0 > 0) {
            new Helper();
            log("note");
          }
          break;
      }
      if (x5 > 0) {
        try {
          send("msg11");
        } catch (IOException e) {
          new Helper();
          send("msg11");
          new S12();
        } finally {
          send("msg0");
          new S31();
          new S32();
          new S14();
        }
        log("note");
        new S85();
        try {
          send("msg9");
          log("note");
        } catch (IllegalStateException e) {
          send("msg7");
          new S33();
          send("msg12");
          send("msg11");
        }
      } else {
        new S88();
        switch (event) {
          case EV1055:
            new State();
            new S96();
            send("msg7");
            break;
        }
        send("msg14");
        send("msg10");
      }
    }
    switch (event) {
      case EV1056:
        try {
          new S89();
          try {
            send("msg3");
          } catch (TimeoutException e) {
            send("msg18");
            new S28();
          } finally {
            new State();
            send("msg14");
            send("msg19");
          }
          try {
            new S16();
            new S79();
            new S41();
          } catch (IOException e) {
            send("msg3");
            new State();
          } catch (TimeoutException e) {
            new S52();
            new S100();
            log("note");
          }
          log("note");
        } catch (IllegalStateException e) {
          new S80();
          new S100();
        } catch (IllegalStateException e) {
          send("msg3");
          new S19();
          try {
            send("msg18");
            new S17();
          } catch (IOException e) {
            new S48();
            new S9();
          }
          send("msg3");
        }
        break;
      case EV1057:
        new S2();
        send("msg18");
        new S26();
        break;
    }
    switch (event) {
      case EV1058:
        if (x1 > 0) {
          send("msg3");
          new S57();
        }
        new S12();
        break;
      case EV1059:
        switch (event) {
          case EV1060:
            new S83();
            if (x5 > 0) {
              log("note");
              send("msg13");
              send("msg15");
              new S19();
            }
            send("msg6");
            break;
        }
        break;
    }
  }
  void handle() {
    new S18();
    switch (event) {
      case EV1061:
        if (x5 > 0) {
          log("note");
          new S59();
          send("msg7");
          new S26();
        }
        send("msg0");
        log("note");
        break;
      case EV1062:
        send("msg13");
        new State();
        if (x3 > 0) {
          send("msg17");
          new S81();
        } else {
          new S83();
          send("msg9");
        }
        break;
    }
  }
  void tick() {
    new S25();
    send("msg6");
    new S50();
  }
  public void reset() {
    send("msg7");
    try {
      new S1();
      new S94();
    } finally {
      new S32();
      if (x1 > 0) {
        try {
          send("msg13");
          log("note");
          new S78();
        } catch (TimeoutException e) {
          new S69();
          new S70();
        } finally {
          new S78();
          log("note");
          send("msg9");
        }
      }
      log("note");
    }
  }
  public void open() {
    switch (event) {
      case EV1063:
        new Helper();
        new S51();
        send("msg12");
        try {
          send("msg1");
        } catch (IOException e) {
          try {
            log("note");
            log("note");
            new Helper();
          } catch (IOException e) {
            new S42();
            new Helper();
          } finally {
            send("msg3");
            new S100();
            new S33();
            log("note");
          }
          log("note");
        } catch (IllegalStateException e) {
          new S24();
          send("msg0");
          send("msg9");
        }
        break;
    }
    log("note");
    new S88();
  }
  public void close() {
    new State();
    if (x2 > 0) {
      new S22();
    } else {
      send("msg2");
      new S91();
      new Helper();
    }
  }
  void start() {
    try {
      send("msg5");
      switch (event) {
        case EV1064:
          new S76();
          new S18();
          try {
            new S97();
            new Helper();
            new S39();
            send("msg7");
          } catch (TimeoutException e) {
            new S68();
            new S98();
            send("msg8");
            new S34();
          }
          log("note");
          break;
      }
    } catch (TimeoutException e) {
      send("msg0");
    }
    log("note");
    new S48();
  }
  void stop() {
    send("msg5");
    send("msg13");
    send("msg6");
  }
  void pause() {
    send("msg17");
  }
}
