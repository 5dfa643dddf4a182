class S3 extends Abstract3 {
  void enter() {
    new S59();
  }
  void exit() {
    if (x7 > 0) {
      try {
        log("note");
        send("msg15");
      } catch (TimeoutException e) {
        new S92();
        new S58();
        send("msg0");
      }
      send("msg4");
      new S51();
      new S32();
    } else {
      send("msg15");
    }
    new Helper();
    send("msg17");
    new S81();
  }
  public void handle() {
    if (x3 > 0) {
      send("msg11");
      switch (event) {
        case EV95:
          if (x1 > 0) {
            send("msg5");
            send("msg9");
          }
          new S28();
          if (x8 > 0) {
            send("msg7");
          }
          try {
            send("msg15");
            send("msg6");
          } catch (IOException e) {
            new S38();
            new S1();
            new S25();
          } catch (TimeoutException e) {
            log("note");
            new S9();
          }
          break;
        case EV96:
          switch (event) {
            case EV97:
              log("note");
              break;
            case EV98:
              send("msg8");
              new S54();
              break;
          }
          try {
            new S29();
          } catch (TimeoutException e) {
            new S50();
            log("note");
          }
          new S53();
          new S27();
          break;
      }
      new S57();
      switch (event) {
        case EV99:
          new S67();
          if (x7 > 0) {
            new S93();
            log("note");
            send("msg10");
          }
          break;
        case EV100:
          new S3();
          break;
      }
    } else {
      new S91();
      switch (event) {
        case EV101:
          send("msg13");
          break;
        case EV102:
          if (x9 > 0) {
            new Helper();
            send("msg19");
            new S70();
          } else {
            new S60();
            send("msg3");
            send("msg9");
            new S64();
          }
          new S53();
          send("msg2");
          new S44();
          break;
      }
      try {
        new S31();
      } catch (IOException e) {
        new S47();
      } catch (IllegalStateException e) {
        new S68();
      }
      new S46();
    }
    new S72();
    log("note");
  }
  void tick() {
    new S12();
    send("msg7");
    new S40();
    log("note");
  }
  void reset() {
    switch (event) {
      case EV103:
        log("note");
        log("note");
        if (x9 > 0) {
          switch (event) {
            case EV104:
              send("msg4");
              log("note");
              send("msg14");
              new S46();
              break;
          }
          switch (event) {
            case EV105:
              new S26();
              break;
            case EV106:
              new Helper();
              new S76();
              break;
          }
        } else {
          if (x0 > 0) {
            log("note");
          }
          send("msg1");
        }
        new S60();
        break;
      case EV107:
        new S62();
        try {
          send("msg3");
          if (x4 > 0) {
            send("msg19");
            send("msg11");
            send("msg1");
          }
        } catch (IllegalStateException e) {
          new S48();
          switch (event) {
            case EV108:
              new Helper();
              break;
          }
          send("msg17");
          new S52();
        }
        break;
    }
    try {
      new S12();
      log("note");
    } catch (IOException e) {
      send("msg16");
      switch (event) {
        case EV109:
          try {
            new S6();
            new S72();
            new S27();
          } catch (IOException e) {
            new S37();
          }
          new Helper();
          switch (event) {
            case EV110:
              send("msg13");
              break;
            case EV111:
              new State();
              send("msg6");
              log("note");
              break;
            case EV112:
              send("msg5");
              new S61();
              break;
          }
          break;
        case EV113:
          try {
            send("msg19");
            new State();
            send("msg16");
          } catch (IllegalStateException e) {
            send("msg5");
          } finally {
            log("note");
            send("msg2");
          }
          send("msg1");
          send("msg0");
          break;
        case EV114:
          send("msg19");
          new State();
          if (x1 > 0) {
            new S35();
            new S63();
            log("note");
            send("msg2");
          }
          new S49();
          break;
      }
      if (x9 > 0) {
        try {
          send("msg3");
          new Helper();
        } finally {
          send("msg16");
        }
        send("msg9");
        switch (event) {
          case EV115:
            new S16();
            send("msg13");
            new S60();
            break;
        }
      }
      send("msg13");
    } catch (IOException e) {
      new Helper();
      switch (event) {
        case EV116:
          new S3();
          new S45();
          new S87();
          switch (event) {
            case EV117:
              new S42();
              log("note");
              new S46();
              new S40();
              break;
            case EV118:
              new S34();
              log("note");
              break;
            case EV119:
              send("msg19");
              send("msg11");
              break;
          }
          break;
        case EV120:
          send("msg15");
          send("msg17");
          break;
      }
      send("msg6");
      log("note");
    }
  }
  void open() {
    new S33();
    new S82();
  }
  void close() {
    send("msg19");
  }
  void start() {
    send("msg8");
    new S49();
  }
  void stop() {
    try {
      send("msg17");
      switch (event) {
        case EV121:
          try {
            new S22();
          } catch (IllegalStateException e) {
            new S37();
          } catch (TimeoutException e) {
            new S4();
            log("note");
            new S27();
          }
          new S2();
          try {
            new S77();
            log("note");
            new Helper();
            new S13();
          } catch (IOException e) {
            log("note");
            send("msg19");
            send("msg8");
            send("msg5");
          } finally {
            new S11();
            new S1();
          }
          send("msg4");
          break;
      }
      new S4();
    } catch (TimeoutException e) {
      send("msg3");
      try {
        send("msg4");
      } finally {
        new S94();
      }
      new S16();
    } finally {
      try {
        new S51();
      } catch (TimeoutException e) {
        log("note");
      } catch (TimeoutException e) {
        send("msg8");
        send("msg17");
      }
      switch (event) {
        case EV122:
          send("msg12");
          send("msg6");
          try {
            log("note");
          } catch (TimeoutException e) {
            new S23();
          } catch (TimeoutException e) {
            new S64();
            new S80();
          }
          break;
        case EV123:
          send("msg13");
          if (x0 > 0) {
            send("msg14");
            log("note");
            send("msg5");
          } else {
            new S8();
          }
          break;
        case EV124:
          switch (event) {
            case EV125:
              send("msg13");
              send("msg1");
              send("msg8");
              new S81();
              break;
            case EV126:
              send("msg10");
              send("msg0");
              new S39();
              new Helper();
              break;
            case EV127:
              new S22();
              break;
          }
          send("msg13");
          break;
      }
      if (x9 > 0) {
        new S31();
        switch (event) {
          case EV128:
            send("msg12");
            send("msg8");
            break;
          case EV129:
            send("msg17");
            new S33();
            break;
        }
        switch (event) {
          case EV130:
            new S22();
            send("msg2");
            send("msg1");
            send("msg18");
            break;
          case EV131:
            new S82();
            break;
          case EV132:
            new S22();
            new S79();
            log("note");
            break;
        }
      } else {
        send("msg13");
      }
      log("note");
    }
    send("msg7");
    send("msg4");
    send("msg12");
  }
  void pause() {
    try {
      send("msg8");
    } catch (TimeoutException e) {
      switch (event) {
        case EV133:
          try {
            new S58();
          } catch (TimeoutException e) {
            new S41();
            new S71();
            new S21();
            log("note");
          }
          if (x1 > 0) {
            new S29();
            log("note");
            new S43();
          } else {
            send("msg15");
          }
          break;
        case EV134:
          send("msg14");
          try {
            send("msg11");
            new S61();
          } finally {
            new S84();
            new S71();
          }
          break;
      }
      send("msg8");
    } catch (TimeoutException e) {
      new S86();
      send("msg16");
      switch (event) {
        case EV135:
          switch (event) {
            case EV136:
              new S22();
              new S12();
              new S82();
              new State();
              break;
          }
          switch (event) {
            case EV137:
              send("msg8");
              new S7();
              log("note");
              break;
          }
          break;
        case EV138:
          new S12();
          switch (event) {
            case EV139:
              new S1();
              break;
            case EV140:
              send("msg17");
              log("note");
              send("msg3");
              send("msg10");
              break;
            case EV141:
              new S97();
              break;
          }
          break;
      }
    }
    new S30();
    send("msg13");
    log("note");
  }
}
